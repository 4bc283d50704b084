#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>

#include "spe/entanglement.hpp"
#include "spe/gates.hpp"
#include "spe/weyl.hpp"

namespace spe::cli {

namespace {

ComplexVector input_state(const std::string& bits, int width) {
  if (static_cast<int>(bits.size()) != width) {
    throw InvalidArgument("input '" + bits + "' has " + std::to_string(bits.size()) +
                          " bits but the circuit has " + std::to_string(width) + " qubits");
  }
  return basis_state(bits);
}

std::string bits_of(std::uint64_t i, int n) { return to_bitstring(i, n); }

json cartan_json(const CartanCoordinates& c) { return json::array({c.c1, c.c2, c.c3}); }

Circuit load_circuit(const std::string& path) { return circuit_from_json(read_json_file(path)); }

// Tomography of circuit(input) followed by MLE; records are returned through
// `records` when requested.
DensityMatrix tomograph(const Circuit& c, const DensityMatrix& input, const Sampling& s,
                        std::vector<TomographyRecord>* records) {
  auto rec = collect(c, input, qst_settings(c.width()), s.resolved(), s.noise(), s.seed);
  auto rho = mle_project(linear_inversion(rec));
  if (records) *records = std::move(rec);
  return rho;
}

double pure_fidelity(const DensityMatrix& rho, const ComplexVector& psi) {
  return std::clamp((psi.adjoint() * rho.matrix() * psi)(0, 0).real(), 0.0, 1.0);
}

}  // namespace

NoiseModel Sampling::noise() const {
  if (noise_path.empty()) return {};
  return noise_from_json(read_json_file(noise_path));
}

std::string csv_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw NumericalError("cannot format number");
  return std::string(buf, end);
}

Unitary2Q load_gate(const GateSource& src) {
  if (!src.name.empty() && !src.matrix_path.empty()) {
    throw InvalidArgument("give either --gate or --matrix, not both");
  }
  if (!src.name.empty()) return named_gate(src.name);
  if (src.matrix_path.empty()) throw InvalidArgument("a gate is required (--gate or --matrix)");
  return Unitary2Q(matrix_from_json(read_json_file(src.matrix_path)));
}

json cmd_analyze(const GateSource& src, std::uint64_t mc_samples, std::uint64_t seed) {
  const Unitary2Q u = load_gate(src);
  const auto inv = local_invariants(u);
  const auto c = cartan_coordinates(u);
  const auto h = h_spectrum(c);
  json chords = json::object();
  for (const auto& ch : chord_lengths(c).chords) chords[std::to_string(ch.j) + std::to_string(ch.k)] = ch.length;
  json out{{"g1", to_json(inv.g1)},
           {"g2", inv.g2},
           {"cartan", cartan_json(c)},
           {"h", json::array({h.h[0], h.h[1], h.h[2], h.h[3]})},
           {"chords", chords},
           {"mean_squared_chord", mean_squared_chord(c)},
           {"ep", entangling_power(c)},
           {"perfect_entangler", is_perfect_entangler(c)},
           {"spe", is_spe(c)}};
  if (mc_samples > 0) {
    auto mc = entangling_power_mc(u, mc_samples, seed);
    out["ep_mc"] = {{"mean", mc.mean}, {"std_error", mc.std_error}, {"samples", mc.samples}};
  }
  return out;
}

void cmd_argand(const GateSource& src, std::ostream& out) {
  const auto a = argand_data(cartan_coordinates(load_gate(src)));
  out << "point_index,re,im\n";
  for (int j = 0; j < 4; ++j) out << j + 1 << ',' << csv_number(a.points[j].real()) << ',' << csv_number(a.points[j].imag()) << '\n';
  out << "j,k,length\n";
  for (const auto& ch : a.chords) out << ch.j << ',' << ch.k << ',' << csv_number(ch.length) << '\n';
}

json cmd_metrics(const MetricsOptions& o) {
  if (o.state_path.empty() == o.rho_path.empty()) throw InvalidArgument("give exactly one of --state or --rho");
  auto load_any = [](const std::string& path) {
    json j = read_json_file(path);
    if (j.is_array() || (j.is_object() && j.value("cols", 0) == 1)) {
      ComplexVector v = vector_from_json(j);
      if (std::abs(v.norm() - 1.0) > 1e-9) throw NotNormalized("state is not normalized");
      return DensityMatrix::from_pure(v);
    }
    return DensityMatrix(matrix_from_json(j));
  };

  if (!o.reference_path.empty()) {
    const DensityMatrix a = !o.state_path.empty() ? load_any(o.state_path) : load_any(o.rho_path);
    return {{"fidelity", state_fidelity(a, load_any(o.reference_path))}};
  }
  if (!o.state_path.empty()) {
    const ComplexVector v = vector_from_json(read_json_file(o.state_path));
    if (v.size() != 4) throw DimensionMismatch("entanglement metrics need a two-qubit state");
    return {{"e", e_measure(v)}, {"concurrence", concurrence_pure(v)}};
  }
  const DensityMatrix rho(matrix_from_json(read_json_file(o.rho_path)));
  if (rho.dim() != 4) throw DimensionMismatch("concurrence needs a two-qubit density matrix");
  return {{"concurrence", concurrence_mixed(rho)}};
}

json cmd_circuit_build(const BuildOptions& o) {
  auto need = [&](std::size_t n) {
    if (o.params.size() != n) {
      throw InvalidArgument("--kind " + o.kind + " takes " + std::to_string(n) + " parameter(s), got " +
                            std::to_string(o.params.size()));
    }
  };
  auto count = [&](const std::string& s) {
    int n = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || end != s.data() + s.size()) throw InvalidArgument("'" + s + "' is not a qubit count");
    return n;
  };
  if (o.kind == "spe") {
    need(1);
    const std::string v = o.variant.empty() ? "a" : o.variant;
    if (v.size() != 1) throw InvalidArgument("SPE variant is one of a, b, c, d");
    return circuit_to_json(build_spe_circuit(spe_variant_from_char(v[0]), parse_angle(o.params[0])));
  }
  if (o.kind == "utqqc") {
    need(3);
    const std::string v = o.variant.empty() ? "1" : o.variant;
    if (v != "1" && v != "2") throw InvalidArgument("UTQQC variant is 1 or 2");
    CartanCoordinates c{parse_angle(o.params[0]), parse_angle(o.params[1]), parse_angle(o.params[2])};
    return circuit_to_json(build_utqqc(v == "1" ? 1 : 2, c));
  }
  if (o.kind == "ghz") {
    need(1);
    return circuit_to_json(build_ghz(count(o.params[0])));
  }
  if (o.kind == "w") {
    need(1);
    return circuit_to_json(build_w(count(o.params[0])));
  }
  throw InvalidArgument("unknown circuit kind '" + o.kind + "' (spe, utqqc, ghz, w)");
}

json cmd_circuit_compile(const std::string& circuit_path) {
  return matrix_to_json(compile_matrix(load_circuit(circuit_path)));
}

json cmd_simulate(const std::string& circuit_path, const std::string& input, const Sampling& s) {
  const Circuit c = load_circuit(circuit_path);
  const NoiseModel noise = s.noise();
  const ComplexVector psi = input_state(input, c.width());
  CountsTable t = noise.gate_noiseless()
                      ? sample_counts(run_state(c, psi), s.resolved(), noise, s.seed)
                      : sample_counts(run_density(c, DensityMatrix::from_pure(psi), noise), s.resolved(), noise, s.seed);
  json out = counts_to_json(t);
  out["input"] = input;
  out["noise"] = noise_to_json(noise);
  return out;
}

void cmd_sweep(const SweepOptions& o, const Sampling& s, std::ostream& out) {
  if (o.points < 2) throw InvalidArgument("a sweep needs at least 2 points");
  if (o.experiment != "fig7" && o.experiment != "fig8") {
    throw InvalidArgument("unknown experiment '" + o.experiment + "' (fig7, fig8)");
  }
  const double lo = parse_angle(o.theta_min), hi = parse_angle(o.theta_max);
  const NoiseModel noise = s.noise();
  std::vector<double> grid;
  for (int k = 0; k < o.points; ++k) grid.push_back(lo + (hi - lo) * k / (o.points - 1));

  if (o.experiment == "fig7") {
    const std::string in = o.input.empty() ? "01" : o.input;
    if (in != "01" && in != "11") throw InvalidArgument("fig7 input is 01 or 11");
    out << "theta,p01_theory,p10_theory,p01_sim,p10_sim\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double t = grid[k];
      const double cc = std::pow(std::cos(t / 2), 2), ss = std::pow(std::sin(t / 2), 2);
      const Circuit c = build_spe_circuit(SpeVariant::A, t);
      const ComplexVector psi = basis_state(in);
      const std::uint64_t seed = s.seed + k;
      CountsTable tab = noise.gate_noiseless()
                            ? sample_counts(run_state(c, psi), s.resolved(), noise, seed)
                            : sample_counts(run_density(c, DensityMatrix::from_pure(psi), noise), s.resolved(), noise, seed);
      const bool first = in == "01";
      out << csv_number(t) << ',' << csv_number(first ? cc : ss) << ',' << csv_number(first ? ss : cc) << ','
          << csv_number(tab.probability("01")) << ',' << csv_number(tab.probability("10")) << '\n';
    }
    return;
  }

  const std::string in = o.input.empty() ? "11" : o.input;
  if (in.size() != 2) throw InvalidArgument("fig8 input is a two-qubit bitstring");
  struct Row {
    double c_sim, fidelity;
  };
  // one task per grid point; seeds are fixed by index so the output does not
  // depend on completion order
  std::vector<std::future<Row>> tasks;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    tasks.push_back(std::async(std::launch::async, [&, k] {
      const Circuit c = build_spe_circuit(SpeVariant::A, grid[k]);
      const ComplexVector psi = basis_state(in);
      Sampling local = s;
      local.seed = s.seed + 9 * k;
      auto rec = collect(c, DensityMatrix::from_pure(psi), qst_settings(2), local.resolved(), noise, local.seed);
      const DensityMatrix rho = mle_project(linear_inversion(rec));
      return Row{concurrence_mixed(rho), pure_fidelity(rho, run_state(c, psi))};
    }));
  }
  out << "theta,concurrence_theory,concurrence_sim,fidelity\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Row r = tasks[k].get();
    const double theory = concurrence_pure(run_state(build_spe_circuit(SpeVariant::A, grid[k]), basis_state(in)));
    out << csv_number(grid[k]) << ',' << csv_number(theory) << ',' << csv_number(r.c_sim) << ','
        << csv_number(r.fidelity) << '\n';
  }
}

json cmd_tomo(const std::string& circuit_path, const std::string& input, const Sampling& s,
              const std::string& records_path) {
  const Circuit c = load_circuit(circuit_path);
  const ComplexVector psi = input_state(input, c.width());
  std::vector<TomographyRecord> records;
  const DensityMatrix rho = tomograph(c, DensityMatrix::from_pure(psi), s, &records);
  if (!records_path.empty()) {
    std::ofstream f(records_path);
    if (!f) throw InvalidArgument("cannot write '" + records_path + "'");
    for (const auto& r : records) f << record_to_json(r).dump() << '\n';
  }
  json out{{"rho", matrix_to_json(rho.matrix())},
           {"fidelity_to_ideal", pure_fidelity(rho, run_state(c, psi))},
           {"input", input},
           {"settings", records.size()}};
  out["concurrence"] = c.width() == 2 ? json(concurrence_mixed(rho)) : json(nullptr);
  if (!s.exact) out["shots_per_setting"] = s.shots;
  return out;
}

json cmd_gatefid(const std::string& circuit_path, const std::string& target, const Sampling& s) {
  const Circuit c = load_circuit(circuit_path);
  if (c.width() != 2) throw InvalidArgument("gate fidelity needs a two-qubit circuit");
  const Unitary2Q u = named_gate(target);
  const auto pt = process_tomography(c, s.resolved(), s.noise(), s.seed);
  const auto f = average_gate_fidelity(pt.channel_on_units, u);
  return {{"avg_gate_fidelity", f.value},
          {"raw", json::array({f.raw_real, f.raw_imag})},
          {"condition_number", pt.condition_number},
          {"target", target}};
}

json cmd_states(const std::string& kind, int n, const Sampling& s) {
  if (kind != "ghz" && kind != "w") throw InvalidArgument("state kind is ghz or w");
  if (n < 2) throw InvalidArgument("states need n >= 2");
  const Circuit c = kind == "ghz" ? build_ghz(n) : build_w(n);
  const ComplexVector target = kind == "ghz" ? ghz_target(n) : w_target(n);
  const ComplexVector zero = basis_state(std::string(static_cast<std::size_t>(n), '0'));
  const NoiseModel noise = s.noise();
  json out{{"kind", kind}, {"n", n}, {"uspe_blocks", c.count(GateKind::USPE)}};
  if (s.exact && noise.gate_noiseless()) {
    const ComplexVector psi = run_state(c, zero);
    json amps = json::object();
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      if (std::abs(psi(i)) > 1e-12) amps[bits_of(static_cast<std::uint64_t>(i), n)] = to_json(psi(i));
    out["amplitudes"] = amps;
    out["fidelity"] = std::norm(target.dot(psi));
    return out;
  }
  if (n > kMaxTomographyQubits) {
    throw InvalidArgument("noisy or sampled state reports use tomography, limited to " +
                          std::to_string(kMaxTomographyQubits) + " qubits");
  }
  const DensityMatrix rho = tomograph(c, DensityMatrix::from_pure(zero), s, nullptr);
  out["fidelity"] = pure_fidelity(rho, target);
  out["rho"] = matrix_to_json(rho.matrix());
  return out;
}

json cmd_pulse_area(const std::string& pulse_path) {
  const auto p = pulse_from_json(read_json_file(pulse_path));
  return {{"area", gs_area(p)}, {"risefall", p.risefall()}};
}

json cmd_pulse_scale(const std::string& pulse_path, const std::string& theta) {
  const auto p = pulse_from_json(read_json_file(pulse_path));
  const double t = parse_angle(theta);
  const auto q = scale_pulse(p, t);
  return {{"pulse", pulse_to_json(q)},
          {"area", gs_area(q)},
          {"area_pi", gs_area(p)},
          {"theta", t},
          {"amplitude_fallback", q.width == 0.0 && p.width > 0.0 && std::abs(q.amp) != std::abs(p.amp)}};
}

json cmd_pulse_schedule(const std::string& calib_path, const std::string& theta) {
  const Calibration cal = calibration_from_json(read_json_file(calib_path));
  const double t = parse_angle(theta);
  const PulseSchedule s = spe_schedule(cal, t);
  json entries = json::array();
  for (const auto& e : s.entries()) entries.push_back(schedule_entry_to_json(e));
  return {{"duration", s.total_duration()},
          {"two_ecr_duration", two_ecr_schedule(cal).total_duration()},
          {"ratio_vs_two_ecr", duration_ratio(cal, t)},
          {"theta", t},
          {"entries", entries}};
}

}  // namespace spe::cli

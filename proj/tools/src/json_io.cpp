#include "json_io.hpp"

#include <algorithm>
#include <fstream>

namespace spe::cli {

namespace {

// Wraps nlohmann's type errors so they surface as user errors.
template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidArgument("complex numbers are written as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = field<long>(j, "rows");
  const auto cols = field<long>(j, "cols");
  const json& data = j.at("data");
  if (rows <= 0 || cols <= 0) throw InvalidArgument("matrix dimensions must be positive");
  if (!data.is_array() || static_cast<long>(data.size()) != rows * cols) {
    throw InvalidArgument("matrix data has " + std::to_string(data.size()) + " entries, expected " +
                          std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[static_cast<std::size_t>(r * cols + c)]);
  return m;
}

ComplexVector vector_from_json(const json& j) {
  if (j.is_array()) {
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
  }
  ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw InvalidArgument("state must be a column (cols = 1)");
  return m.col(0);
}

json gate_to_json(const Gate& g) {
  json j{{"kind", std::string(to_string(g.kind))}, {"qubits", g.qubits}};
  if (is_parametric(g.kind)) j["theta"] = g.theta;
  if (g.kind == GateKind::U1Q) j["matrix"] = matrix_to_json(g.matrix);
  return j;
}

Gate gate_from_json(const json& j) {
  Gate g;
  g.kind = gate_kind_from_string(field<std::string>(j, "kind"));
  g.qubits = field<std::vector<int>>(j, "qubits");
  if (is_parametric(g.kind)) g.theta = field<double>(j, "theta");
  if (g.kind == GateKind::U1Q) g.matrix = matrix_from_json(j.at("matrix"));
  return g;
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) gates.push_back(gate_to_json(g));
  return {{"width", c.width()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c(field<int>(j, "width"));
  const json& gates = j.contains("gates") ? j.at("gates") : json::array();
  if (!gates.is_array()) throw InvalidArgument("'gates' must be a list");
  for (const auto& g : gates) c.add(gate_from_json(g));
  return c;
}

NoiseModel noise_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("noise model must be a JSON object");
  static const char* known[] = {"depol_1q", "depol_2q", "depol_global", "readout_flip_0to1",
                                "readout_flip_1to0", "seed"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw InvalidArgument("unknown noise field '" + key + "'");
    }
  }
  NoiseModel n;
  n.depol_1q = field_or(j, "depol_1q", 0.0);
  n.depol_2q = field_or(j, "depol_2q", 0.0);
  n.depol_global = field_or(j, "depol_global", 0.0);
  n.readout_flip_0to1 = field_or(j, "readout_flip_0to1", 0.0);
  n.readout_flip_1to0 = field_or(j, "readout_flip_1to0", 0.0);
  n.seed = field_or<std::uint64_t>(j, "seed", 0);
  n.validate();
  return n;
}

json noise_to_json(const NoiseModel& n) {
  return {{"depol_1q", n.depol_1q},
          {"depol_2q", n.depol_2q},
          {"depol_global", n.depol_global},
          {"readout_flip_0to1", n.readout_flip_0to1},
          {"readout_flip_1to0", n.readout_flip_1to0}};
}

json pulse_to_json(const GaussianSquarePulse& p) {
  return {{"amp", to_json(p.amp)}, {"sigma", p.sigma}, {"width", p.width}, {"duration", p.duration}};
}

GaussianSquarePulse pulse_from_json(const json& j) {
  if (!j.is_object() || !j.contains("amp")) throw InvalidArgument("missing field 'amp'");
  GaussianSquarePulse p;
  p.amp = complex_from_json(j.at("amp"));
  p.sigma = field<double>(j, "sigma");
  p.width = field<double>(j, "width");
  p.duration = field<double>(j, "duration");
  p.validate();
  return p;
}

Calibration calibration_from_json(const json& j) {
  Calibration c;
  if (!j.is_object() || !j.contains("cr") || !j.contains("rotary")) {
    throw InvalidArgument("calibration needs 'cr' and 'rotary' pulses");
  }
  c.cr = pulse_from_json(j.at("cr"));
  c.rotary = pulse_from_json(j.at("rotary"));
  c.x_pulse_duration = field<double>(j, "x_pulse_duration");
  c.sx_pulse_duration = field<double>(j, "sx_pulse_duration");
  c.dt = field<double>(j, "dt");
  c.validate();
  return c;
}

json schedule_entry_to_json(const ScheduleEntry& e) {
  json j{{"channel", e.channel}, {"label", e.label}, {"start", e.start}, {"duration", e.duration}};
  if (e.pulse) j["pulse"] = pulse_to_json(*e.pulse);
  return j;
}

json counts_to_json(const CountsTable& c) {
  json j{{"probabilities", c.probability_map()}, {"exact", c.exact}};
  if (!c.exact) {
    j["counts"] = c.count_map();
    j["shots"] = c.shots;
  }
  return j;
}

json record_to_json(const TomographyRecord& r) {
  json j = counts_to_json(r.counts);
  j["setting"] = r.setting;
  return j;
}

}  // namespace spe::cli

#include "spe/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace spe {

namespace {

void require_tomography_width(int n) {
  if (n < 1) throw InvalidArgument("tomography needs at least one qubit");
  if (n > kMaxTomographyQubits) {
    std::ostringstream os;
    os << "tomography is capped at " << kMaxTomographyQubits << " qubits (got " << n << ")";
    throw InvalidArgument(os.str());
  }
}

// Expectation of the Z-parity over the non-identity positions of `pauli`,
// from a record measured in a compatible setting.
double parity_expectation(const std::string& pauli, const CountsTable& counts) {
  const int n = static_cast<int>(pauli.size());
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i)
    if (pauli[static_cast<std::size_t>(i)] != 'I') mask |= std::uint64_t{1} << (n - 1 - i);
  double e = 0;
  for (std::size_t b = 0; b < counts.probabilities.size(); ++b) {
    const int parity = __builtin_popcountll(b & mask) & 1;
    e += parity ? -counts.probabilities[b] : counts.probabilities[b];
  }
  return e;
}

bool extends(const std::string& setting, const std::string& pauli) {
  for (std::size_t i = 0; i < pauli.size(); ++i)
    if (pauli[i] != 'I' && pauli[i] != setting[i]) return false;
  return true;
}

std::vector<std::string> pauli_strings(int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<std::string> qst_settings(int n) {
  if (n < 1 || n > kMaxTomographyQubits) {
    throw InvalidArgument("qst_settings supports 1.." + std::to_string(kMaxTomographyQubits) +
                          " qubits, got " + std::to_string(n));
  }
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'X', 'Y', 'Z'}) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

Circuit measurement_rotation(const std::string& setting) {
  const int n = static_cast<int>(setting.size());
  Circuit c(n);
  for (int i = 0; i < n; ++i) {
    const int q = n - 1 - i;
    switch (setting[static_cast<std::size_t>(i)]) {
      case 'X': c.add(Gate::h(q)); break;
      case 'Y': c.add(Gate::sdg(q)).add(Gate::h(q)); break;
      case 'Z': break;
      default: throw InvalidArgument("setting '" + setting + "' must use only X, Y, Z");
    }
  }
  return c;
}

std::vector<TomographyRecord> collect_state(const DensityMatrix& state,
                                            const std::vector<std::string>& settings,
                                            Shots shots, const NoiseModel& noise,
                                            std::uint64_t seed) {
  const int n = state.num_qubits();
  require_tomography_width(n);
  std::vector<TomographyRecord> out;
  out.reserve(settings.size());
  for (std::size_t i = 0; i < settings.size(); ++i) {
    if (static_cast<int>(settings[i].size()) != n) {
      throw InvalidArgument("setting '" + settings[i] + "' length does not match qubit count");
    }
    const DensityMatrix rotated = run_density(measurement_rotation(settings[i]), state, noise);
    out.push_back({settings[i], sample_counts(rotated, shots, noise, seed + i)});
  }
  return out;
}

std::vector<TomographyRecord> collect(const Circuit& circuit, const DensityMatrix& input,
                                      const std::vector<std::string>& settings, Shots shots,
                                      const NoiseModel& noise, std::uint64_t seed) {
  require_tomography_width(circuit.width());
  const DensityMatrix prepared = run_density(circuit, input, noise);
  // Global depolarizing belongs to the circuit, not the measurement rotations.
  NoiseModel meas = noise;
  meas.depol_global = 0.0;
  return collect_state(prepared, settings, shots, meas, seed);
}

ComplexMatrix linear_inversion(const std::vector<TomographyRecord>& records) {
  if (records.empty()) throw InvalidArgument("linear_inversion: no records");
  const int n = static_cast<int>(records.front().setting.size());
  require_tomography_width(n);
  const auto settings = qst_settings(n);
  for (const auto& s : settings) {
    const bool present = std::any_of(records.begin(), records.end(),
                                     [&](const TomographyRecord& r) { return r.setting == s; });
    if (!present) throw InvalidArgument("linear_inversion: incomplete settings, missing " + s);
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (const std::string& p : pauli_strings(n)) {
    double sum = 0;
    int used = 0;
    for (const auto& r : records) {
      if (static_cast<int>(r.setting.size()) != n) throw InvalidArgument("linear_inversion: mixed record widths");
      if (!extends(r.setting, p)) continue;
      sum += parity_expectation(p, r.counts);
      ++used;
    }
    rho += (sum / used) * pauli::from_string(p);
  }
  rho /= static_cast<double>(dim);
  return 0.5 * (rho + rho.adjoint());
}

std::vector<double> project_spectrum(const std::vector<double>& eigenvalues) {
  const std::size_t d = eigenvalues.size();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });
  std::vector<double> lam(d);
  for (std::size_t i = 0; i < d; ++i) lam[i] = eigenvalues[order[i]];

  // Sweep from the smallest eigenvalue, zeroing while the running deficit
  // spread over the remaining ones would leave it negative.
  std::size_t i = d;
  double acc = 0.0;
  while (i > 0 && lam[i - 1] + acc / static_cast<double>(i) < 0.0) {
    acc += lam[i - 1];
    lam[i - 1] = 0.0;
    --i;
  }
  for (std::size_t j = 0; j < i; ++j) lam[j] += acc / static_cast<double>(i);

  std::vector<double> out(d);
  for (std::size_t k = 0; k < d; ++k) out[order[k]] = lam[k];
  return out;
}

DensityMatrix mle_project(const ComplexMatrix& h) {
  if (!is_hermitian(h, 1e-8)) throw InvalidArgument("mle_project: input is not Hermitian");
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "mle_project: trace " << tr << " differs from 1";
    throw InvalidArgument(os.str());
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) throw NoConvergence("mle_project: eigensolver failed");
  std::vector<double> ev(static_cast<std::size_t>(es.eigenvalues().size()));
  for (std::size_t i = 0; i < ev.size(); ++i) ev[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
  // Absorb the (tiny) trace error before projecting.
  const double shift = (1.0 - tr) / static_cast<double>(ev.size());
  for (double& x : ev) x += shift;
  const std::vector<double> proj = project_spectrum(ev);
  Eigen::VectorXd lam(static_cast<Eigen::Index>(proj.size()));
  for (std::size_t i = 0; i < proj.size(); ++i) lam(static_cast<Eigen::Index>(i)) = proj[i];
  const ComplexMatrix& v = es.eigenvectors();
  ComplexMatrix rho = v * lam.cast<cplx>().asDiagonal() * v.adjoint();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

DensityMatrix reconstruct_state(const Circuit& circuit, const DensityMatrix& input, Shots shots,
                                const NoiseModel& noise, std::uint64_t seed) {
  const auto records = collect(circuit, input, qst_settings(circuit.width()), shots, noise, seed);
  return mle_project(linear_inversion(records));
}

const std::array<ComplexVector, 16>& process_inputs() {
  static const std::array<ComplexVector, 16> inputs = [] {
    const double r = 1.0 / std::sqrt(2.0);
    std::array<ComplexVector, 4> single;
    for (auto& s : single) s = ComplexVector::Zero(2);
    single[0](0) = 1;
    single[1](1) = 1;
    single[2](0) = r;
    single[2](1) = r;
    single[3](0) = r;
    single[3](1) = cplx(0, r);
    std::array<ComplexVector, 16> out;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out[4 * a + b] = kron(single[a], single[b]);
    return out;
  }();
  return inputs;
}

const UnitExpansion& matrix_unit_expansion() {
  static const UnitExpansion expansion = [] {
    // Column a holds vec(|in_a><in_a|) in row-major order.
    Eigen::MatrixXcd span(16, 16);
    const auto& in = process_inputs();
    for (int a = 0; a < 16; ++a) {
      const ComplexMatrix proj = in[a] * in[a].adjoint();
      for (int k = 0; k < 16; ++k) span(k, a) = proj(k / 4, k % 4);
    }
    // rho_k = span * c_k, so c_k is column k of span^{-1}.
    const Eigen::MatrixXcd inv = span.fullPivLu().inverse();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(span);
    const auto& sv = svd.singularValues();
    UnitExpansion e;
    e.coefficients = inv.transpose();
    e.condition_number = sv(0) / sv(sv.size() - 1);
    return e;
  }();
  return expansion;
}

ProcessTomographyResult process_tomography(const Circuit& circuit, Shots shots,
                                           const NoiseModel& noise, std::uint64_t seed) {
  if (circuit.width() != 2) throw InvalidArgument("process tomography needs a two-qubit circuit");
  const auto& in = process_inputs();
  const auto settings = qst_settings(2);
  std::vector<DensityMatrix> outputs;
  outputs.reserve(16);
  for (int a = 0; a < 16; ++a) {
    const auto records = collect(circuit, DensityMatrix::from_pure(in[a]), settings, shots,
                                 noise, seed + static_cast<std::uint64_t>(a) * settings.size());
    outputs.push_back(mle_project(linear_inversion(records)));
  }
  const UnitExpansion& ex = matrix_unit_expansion();
  ProcessTomographyResult res{{}, outputs, ex.condition_number};
  for (int k = 0; k < 16; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    for (int a = 0; a < 16; ++a) e += ex.coefficients(k, a) * outputs[a].matrix();
    res.channel_on_units[k] = e;
  }
  return res;
}

}  // namespace spe

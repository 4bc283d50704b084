#include "spe/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace spe {

namespace {

int width_of(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) throw DimensionMismatch("dimension is not a power of two");
  return n;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "noise parameter " << name << " = " << p << " is not in [0, 1]";
    throw InvalidArgument(os.str());
  }
}

// rho <- G rho G^dagger, with G acting on `qubits`.
void conjugate_in_place(ComplexMatrix& rho, const ComplexMatrix& g, const std::vector<int>& qubits) {
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    ComplexVector col = rho.col(c);
    apply_gate(col, g, qubits);
    rho.col(c) = col;
  }
  // (G A)^dagger = A^dagger G^dagger; apply G to the rows through the adjoint.
  ComplexMatrix adj = rho.adjoint();
  for (Eigen::Index c = 0; c < adj.cols(); ++c) {
    ComplexVector col = adj.col(c);
    apply_gate(col, g, qubits);
    adj.col(c) = col;
  }
  rho = adj.adjoint();
}

}  // namespace

void NoiseModel::validate() const {
  check_probability(depol_1q, "depol_1q");
  check_probability(depol_2q, "depol_2q");
  check_probability(depol_global, "depol_global");
  check_probability(readout_flip_0to1, "readout_flip_0to1");
  check_probability(readout_flip_1to0, "readout_flip_1to0");
}

bool NoiseModel::gate_noiseless() const {
  return depol_1q == 0.0 && depol_2q == 0.0 && depol_global == 0.0;
}

bool NoiseModel::readout_noiseless() const {
  return readout_flip_0to1 == 0.0 && readout_flip_1to0 == 0.0;
}

std::string to_bitstring(std::uint64_t index, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int q = 0; q < width; ++q)
    if ((index >> q) & 1) s[static_cast<std::size_t>(width - 1 - q)] = '1';
  return s;
}

std::uint64_t from_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > 63) throw InvalidArgument("bitstring length must be 1..63");
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("bitstring '" + bits + "' contains non-binary characters");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

double CountsTable::probability(const std::string& bitstring) const {
  if (static_cast<int>(bitstring.size()) != width) throw InvalidArgument("bitstring width mismatch");
  return probabilities.at(from_bitstring(bitstring));
}

std::map<std::string, std::uint64_t> CountsTable::count_map() const {
  std::map<std::string, std::uint64_t> out;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) out[to_bitstring(i, width)] = counts[i];
  return out;
}

std::map<std::string, double> CountsTable::probability_map() const {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < probabilities.size(); ++i)
    if (probabilities[i] > 0.0) out[to_bitstring(i, width)] = probabilities[i];
  return out;
}

ComplexVector basis_state(const std::string& bits) {
  const std::uint64_t idx = from_bitstring(bits);
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << bits.size());
  v(static_cast<Eigen::Index>(idx)) = 1.0;
  return v;
}

void apply_gate(ComplexVector& state, const ComplexMatrix& g, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index sub = Eigen::Index{1} << k;
  if (g.rows() != sub || g.cols() != sub) throw DimensionMismatch("apply_gate: gate size does not match qubit count");
  Eigen::Index mask = 0;
  for (int q : qubits) mask |= Eigen::Index{1} << q;
  std::vector<Eigen::Index> offsets(sub);
  for (Eigen::Index s = 0; s < sub; ++s) {
    Eigen::Index bits = 0;
    for (int i = 0; i < k; ++i)
      if ((s >> i) & 1) bits |= Eigen::Index{1} << qubits[i];
    offsets[s] = bits;
  }
  ComplexVector in(sub), out(sub);
  for (Eigen::Index base = 0; base < state.size(); ++base) {
    if (base & mask) continue;
    for (Eigen::Index s = 0; s < sub; ++s) in(s) = state(base | offsets[s]);
    out.noalias() = g * in;
    for (Eigen::Index s = 0; s < sub; ++s) state(base | offsets[s]) = out(s);
  }
}

ComplexVector run_state(const Circuit& c, const ComplexVector& input) {
  if (input.size() != (Eigen::Index{1} << c.width())) {
    throw DimensionMismatch("input state dimension does not match circuit width");
  }
  ComplexVector s = input;
  for (const Gate& g : c.gates()) apply_gate(s, gate_matrix(g), g.qubits);
  return s;
}

ComplexMatrix depolarize(const ComplexMatrix& rho, const std::vector<int>& qubits, double p) {
  if (p == 0.0) return rho;
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index sub = Eigen::Index{1} << k;
  Eigen::Index mask = 0;
  std::vector<Eigen::Index> offsets(sub);
  for (int q : qubits) mask |= Eigen::Index{1} << q;
  for (Eigen::Index s = 0; s < sub; ++s) {
    Eigen::Index bits = 0;
    for (int i = 0; i < k; ++i)
      if ((s >> i) & 1) bits |= Eigen::Index{1} << qubits[i];
    offsets[s] = bits;
  }
  ComplexMatrix out = (1.0 - p) * rho;
  const double w = p / static_cast<double>(sub);
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    if (r & mask) continue;
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if (c & mask) continue;
      cplx reduced = 0;
      for (Eigen::Index s = 0; s < sub; ++s) reduced += rho(r | offsets[s], c | offsets[s]);
      for (Eigen::Index s = 0; s < sub; ++s) out(r | offsets[s], c | offsets[s]) += w * reduced;
    }
  }
  return out;
}

DensityMatrix run_density(const Circuit& c, const DensityMatrix& rho, const NoiseModel& noise) {
  noise.validate();
  if (rho.dim() != (Eigen::Index{1} << c.width())) {
    throw DimensionMismatch("density matrix dimension does not match circuit width");
  }
  ComplexMatrix m = rho.matrix();
  for (const Gate& g : c.gates()) {
    conjugate_in_place(m, gate_matrix(g), g.qubits);
    const double p = g.qubits.size() == 1 ? noise.depol_1q : noise.depol_2q;
    m = depolarize(m, g.qubits, p);
  }
  if (noise.depol_global > 0.0) {
    std::vector<int> all(static_cast<std::size_t>(c.width()));
    for (int q = 0; q < c.width(); ++q) all[static_cast<std::size_t>(q)] = q;
    m = depolarize(m, all, noise.depol_global);
  }
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

std::vector<double> born_probabilities(const ComplexVector& state) {
  std::vector<double> p(static_cast<std::size_t>(state.size()));
  for (Eigen::Index i = 0; i < state.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(state(i));
  return p;
}

std::vector<double> born_probabilities(const DensityMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i)
    p[static_cast<std::size_t>(i)] = std::max(0.0, rho.matrix()(i, i).real());
  return p;
}

std::vector<double> apply_readout(const std::vector<double>& probs, int width,
                                  const NoiseModel& noise) {
  noise.validate();
  if (noise.readout_noiseless()) return probs;
  std::vector<double> cur = probs;
  for (int q = 0; q < width; ++q) {
    std::vector<double> next(cur.size(), 0.0);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == 0.0) continue;
      const bool one = (i & bit) != 0;
      const double flip = one ? noise.readout_flip_1to0 : noise.readout_flip_0to1;
      next[i] += (1.0 - flip) * cur[i];
      next[i ^ bit] += flip * cur[i];
    }
    cur = std::move(next);
  }
  return cur;
}

CountsTable sample_counts(const std::vector<double>& born, int width, Shots shots,
                          const NoiseModel& noise, std::uint64_t seed) {
  if (born.size() != (std::size_t{1} << width)) throw DimensionMismatch("probability vector size does not match width");
  CountsTable t;
  t.width = width;
  std::vector<double> p = apply_readout(born, width, noise);
  double total = 0;
  for (double x : p) total += x;
  for (double& x : p) x /= total;
  if (!shots) {
    t.exact = true;
    t.probabilities = std::move(p);
    return t;
  }
  if (*shots == 0) throw InvalidArgument("shots must be >= 1");
  t.shots = *shots;
  t.counts.assign(p.size(), 0);
  Rng rng(seed);
  std::discrete_distribution<std::size_t> dist(p.begin(), p.end());
  for (std::uint64_t s = 0; s < *shots; ++s) ++t.counts[dist(rng)];
  t.probabilities.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    t.probabilities[i] = static_cast<double>(t.counts[i]) / static_cast<double>(*shots);
  return t;
}

CountsTable sample_counts(const ComplexVector& state, Shots shots, const NoiseModel& noise,
                          std::uint64_t seed) {
  return sample_counts(born_probabilities(state), width_of(state.size()), shots, noise, seed);
}

CountsTable sample_counts(const DensityMatrix& rho, Shots shots, const NoiseModel& noise,
                          std::uint64_t seed) {
  return sample_counts(born_probabilities(rho), width_of(rho.dim()), shots, noise, seed);
}

}  // namespace spe

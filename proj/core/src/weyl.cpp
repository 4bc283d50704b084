#include "spe/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "spe/entanglement.hpp"

namespace spe {

namespace {

constexpr double kHalfPi = kPi / 2.0;
constexpr double kFaceTol = 1e-9;

// cos(2 c_p) for p = 1..3.
std::array<double, 3> cos2(const CartanCoordinates& c) {
  return {std::cos(2 * c.c1), std::cos(2 * c.c2), std::cos(2 * c.c3)};
}

double pair_sum(const std::array<double, 3>& x) {
  return x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
}

// Representative of v modulo pi in (-pi/2, pi/2].
double reduce_half_open(double v) {
  v -= kPi * std::round(v / kPi);
  if (v <= -kHalfPi) v += kPi;
  if (v > kHalfPi) v -= kPi;
  return v;
}

// Spectrum of m(U) / det(U)^{1/2} as angles h_j with sum zero.
std::array<double, 4> normalized_h(const Unitary2Q& u) {
  const ComplexMatrix m = makhlin_matrix(u);
  const cplx s = std::sqrt(u.matrix().determinant());
  const EigenDecomposition ed = eig_normal(m / s);
  std::array<double, 4> h{};
  for (int j = 0; j < 4; ++j) h[j] = std::arg(ed.values(j));
  const double total = h[0] + h[1] + h[2] + h[3];
  h[3] -= 2 * kPi * std::round(total / (2 * kPi));
  return h;
}

// Splits K = A (x) B with A, B in SU(2) (up to a common sign).
std::pair<ComplexMatrix, ComplexMatrix> tensor_factor(const ComplexMatrix& k) {
  int best_a = 0, best_b = 0;
  double best = -1;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double n = k.block(2 * a, 2 * b, 2, 2).norm();
      if (n > best) {
        best = n;
        best_a = a;
        best_b = b;
      }
    }
  }
  const ComplexMatrix blk = k.block(2 * best_a, 2 * best_b, 2, 2);
  const ComplexMatrix right = blk / std::sqrt(blk.determinant());
  ComplexMatrix left(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      left(a, b) = (right.adjoint() * k.block(2 * a, 2 * b, 2, 2)).trace() / 2.0;
  return {left, right};
}

}  // namespace

double ChordSet::length(int j, int k) const {
  if (j > k) std::swap(j, k);
  for (const Chord& ch : chords)
    if (ch.j == j && ch.k == k) return ch.length;
  throw InvalidArgument("chord index out of range");
}

ComplexMatrix KakDecomposition::reassemble() const {
  return std::polar(1.0, global_phase) * kron(k1_left, k1_right) *
         nonlocal_gate(cartan) * kron(k2_left, k2_right);
}

const std::array<std::pair<int, int>, 6>& chord_pairs() {
  static const std::array<std::pair<int, int>, 6> pairs{
      {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  return pairs;
}

ComplexMatrix nonlocal_gate(const CartanCoordinates& c) {
  const HSpectrum hs = h_spectrum(c);
  ComplexVector d(4);
  for (int j = 0; j < 4; ++j) d(j) = std::polar(1.0, hs.h[j] / 2.0);
  const ComplexMatrix& q = magic_basis();
  return q * d.asDiagonal() * q.adjoint();
}

ComplexMatrix magic_transform(const Unitary2Q& u) {
  const ComplexMatrix& q = magic_basis();
  return q.adjoint() * u.matrix() * q;
}

ComplexMatrix makhlin_matrix(const Unitary2Q& u) {
  const ComplexMatrix mu = magic_transform(u);
  return mu.transpose() * mu;
}

LocalInvariants local_invariants(const Unitary2Q& u) {
  const ComplexMatrix m = makhlin_matrix(u);
  const cplx det = u.matrix().determinant();
  const cplx tr = m.trace();
  const cplx tr_sq = (m * m).trace();
  LocalInvariants out;
  out.g1 = tr * tr / (16.0 * det);
  const cplx g2 = (tr * tr - tr_sq) / (4.0 * det);
  out.g2 = g2.real();
  out.g2_imag = g2.imag();
  return out;
}

LocalInvariants invariants_from_cartan(const CartanCoordinates& c) {
  const auto x = cos2(c);
  const double sprod = std::sin(2 * c.c1) * std::sin(2 * c.c2) * std::sin(2 * c.c3);
  const double sum = x[0] + x[1] + x[2];
  LocalInvariants out;
  out.g1 = 0.25 * cplx(sum + x[0] * x[1] * x[2], sprod);
  out.g2 = sum;
  return out;
}

HSpectrum h_spectrum(const CartanCoordinates& c) {
  HSpectrum out;
  out.h = {c.c1 - c.c2 + c.c3, c.c1 + c.c2 - c.c3, -c.c1 - c.c2 - c.c3,
           -c.c1 + c.c2 + c.c3};
  return out;
}

CartanCoordinates canonicalize(const CartanCoordinates& c) {
  std::array<double, 3> v{reduce_half_open(c.c1), reduce_half_open(c.c2),
                          reduce_half_open(c.c3)};
  int negatives = 0;
  for (double& x : v) {
    if (x < 0) {
      ++negatives;
      x = -x;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  // Only pairs of signs can be flipped; an odd count leaves one on the
  // smallest coordinate.
  if (negatives % 2 == 1) v[2] = -v[2];
  if (std::abs(v[0] - kHalfPi) < kFaceTol) v[2] = std::abs(v[2]);
  return {v[0], v[1], v[2]};
}

bool in_chamber(const CartanCoordinates& c, double tol) {
  return c.c1 <= kHalfPi + tol && c.c1 >= c.c2 - tol && c.c2 >= std::abs(c.c3) - tol;
}

CartanCoordinates cartan_coordinates(const Unitary2Q& u) {
  const auto h = normalized_h(u);
  const CartanCoordinates raw{(h[0] + h[1]) / 2.0, (h[1] + h[3]) / 2.0,
                              (h[0] + h[3]) / 2.0};
  return canonicalize(raw);
}

ChordSet chord_lengths(const CartanCoordinates& c) {
  const HSpectrum hs = h_spectrum(c);
  ChordSet out;
  const auto& pairs = chord_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [j, k] = pairs[i];
    const double sq = 2.0 - 2.0 * std::cos(hs.h[j - 1] - hs.h[k - 1]);
    out.chords[i] = {j, k, std::sqrt(std::max(0.0, sq))};
  }
  return out;
}

double mean_squared_chord(const CartanCoordinates& c) {
  return (2.0 / 3.0) * (3.0 - pair_sum(cos2(c)));
}

double entangling_power(const CartanCoordinates& c) {
  return (3.0 - pair_sum(cos2(c))) / 18.0;
}

MonteCarloEstimate entangling_power_mc(const Unitary2Q& u, std::uint64_t samples,
                                       std::uint64_t seed) {
  if (samples == 0) throw InvalidArgument("entangling_power_mc: samples must be >= 1");
  Rng rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t n = 1; n <= samples; ++n) {
    const ComplexVector a = random_state(2, rng);
    const ComplexVector b = random_state(2, rng);
    const ComplexVector out = u.matrix() * kron(a, b);
    const double e = linear_entropy(out);
    const double delta = e - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (e - mean);
  }
  MonteCarloEstimate est;
  est.mean = mean;
  est.samples = samples;
  if (samples > 1) {
    const double var = m2 / static_cast<double>(samples - 1);
    est.std_error = std::sqrt(var / static_cast<double>(samples));
  }
  return est;
}

bool is_perfect_entangler(const CartanCoordinates& c) {
  const HSpectrum hs = h_spectrum(c);
  std::vector<cplx> pts;
  for (double h : hs.h) {
    const cplx p = std::polar(1.0, h - hs.h[2]);
    const bool dup = std::any_of(pts.begin(), pts.end(),
                                 [&](const cplx& q) { return std::abs(p - q) < 1e-9; });
    if (!dup) pts.push_back(p);
  }
  if (pts.size() < 2) return false;
  std::sort(pts.begin(), pts.end(),
            [](const cplx& a, const cplx& b) { return std::arg(a) < std::arg(b); });
  auto cross = [](const cplx& a, const cplx& b) {
    return a.real() * b.imag() - a.imag() * b.real();
  };
  constexpr double kAreaTol = 1e-10;
  if (pts.size() == 2) {
    const double dot = pts[0].real() * pts[1].real() + pts[0].imag() * pts[1].imag();
    return std::abs(cross(pts[0], pts[1])) <= kAreaTol && dot < 0;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (cross(pts[i], pts[(i + 1) % pts.size()]) < -kAreaTol) return false;
  }
  return true;
}

bool is_spe(const CartanCoordinates& c) {
  const CartanCoordinates k = canonicalize(c);
  return std::abs(k.c1 - kHalfPi) < 1e-9 && std::abs(k.c3) < 1e-9;
}

std::vector<ProductPair> theorem1_pairs(const CartanCoordinates& c) {
  const HSpectrum hs = h_spectrum(c);
  const ComplexMatrix& q = magic_basis();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<ProductPair> out;
  for (const auto& [j, k] : chord_pairs()) {
    const double d = hs.h[j - 1] - hs.h[k - 1];
    if (std::abs(std::remainder(d - kPi, 2 * kPi)) > 1e-9) continue;
    ProductPair pp;
    pp.j = j;
    pp.k = k;
    pp.plus = inv_sqrt2 * (q.col(j - 1) + kI * q.col(k - 1));
    pp.minus = inv_sqrt2 * (q.col(j - 1) - kI * q.col(k - 1));
    out.push_back(std::move(pp));
  }
  return out;
}

KakDecomposition kak_decompose(const Unitary2Q& u) {
  const ComplexMatrix& q = magic_basis();
  const ComplexMatrix mu = magic_transform(u);
  const ComplexMatrix m = mu.transpose() * mu;
  const cplx s = std::sqrt(u.matrix().determinant());

  // m is complex symmetric and unitary, so its real and imaginary parts are
  // commuting real symmetric matrices: a generic real combination of them
  // has an eigenbasis that diagonalizes both.
  const Eigen::Matrix4d re = m.real();
  const Eigen::Matrix4d im = m.imag();
  Eigen::Matrix4d o;
  bool found = false;
  for (double x : {0.6180339887, 1.4142135624, -0.3819660113, 2.7182818285, -1.7320508076,
                   0.1234567890, 5.0, -9.0}) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re + x * im);
    o = es.eigenvectors();
    const ComplexMatrix d = o.transpose().cast<cplx>() * m * o.cast<cplx>();
    const ComplexMatrix off = d - ComplexMatrix(d.diagonal().asDiagonal());
    if (off.cwiseAbs().maxCoeff() < 1e-9) {
      found = true;
      break;
    }
  }
  if (!found) throw NoConvergence("kak_decompose: simultaneous diagonalization failed");

  const ComplexMatrix dm = o.transpose().cast<cplx>() * m * o.cast<cplx>();
  const CartanCoordinates cartan = cartan_coordinates(u);
  const HSpectrum hs = h_spectrum(cartan);

  // Assign eigenvectors to target eigenvalues e^{i h_j}; the sqrt(det) branch
  // is free, so try both signs.
  std::array<int, 4> perm{};
  cplx scale = 0;
  for (double sign : {1.0, -1.0}) {
    const cplx sc = sign * s;
    std::array<bool, 4> used{};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      const cplx target = std::polar(1.0, hs.h[i]);
      int best = -1;
      double best_d = 1e300;
      for (int j = 0; j < 4; ++j) {
        if (used[j]) continue;
        const double dist = std::abs(dm(j, j) / sc - target);
        if (dist < best_d) {
          best_d = dist;
          best = j;
        }
      }
      used[best] = true;
      perm[i] = best;
      worst = std::max(worst, best_d);
    }
    if (worst < 1e-6) {
      scale = sc;
      break;
    }
  }
  if (scale == cplx(0.0)) throw NoConvergence("kak_decompose: spectrum does not match canonical class");

  Eigen::Matrix4d op;
  for (int i = 0; i < 4; ++i) op.col(i) = o.col(perm[i]);
  if (op.determinant() < 0) op.col(0) *= -1.0;

  const cplx phase = std::sqrt(scale);
  ComplexVector dinv(4);
  for (int j = 0; j < 4; ++j) dinv(j) = std::polar(1.0, -hs.h[j] / 2.0);
  const ComplexMatrix k1_magic = mu * op.cast<cplx>() * dinv.asDiagonal() / phase;
  const ComplexMatrix k1 = q * k1_magic * q.adjoint();
  const ComplexMatrix k2 = q * op.transpose().cast<cplx>() * q.adjoint();

  KakDecomposition out;
  std::tie(out.k1_left, out.k1_right) = tensor_factor(k1);
  std::tie(out.k2_left, out.k2_right) = tensor_factor(k2);
  out.cartan = cartan;
  out.global_phase = std::arg(phase);

  const double err = (out.reassemble() - u.matrix()).cwiseAbs().maxCoeff();
  if (err > kAlgebraTol) {
    std::ostringstream os;
    os << "kak_decompose: reassembly error " << err;
    throw NoConvergence(os.str());
  }
  return out;
}

ArgandData argand_data(const CartanCoordinates& c) {
  const HSpectrum hs = h_spectrum(c);
  ArgandData out;
  for (int j = 0; j < 4; ++j) out.points[j] = std::polar(1.0, hs.h[j] - hs.h[2]);
  const auto& pairs = chord_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [j, k] = pairs[i];
    const cplx a = out.points[j - 1];
    const cplx b = out.points[k - 1];
    out.chords[i] = {j, k, a, b, std::abs(a - b)};
  }
  return out;
}

}  // namespace spe

#include "spe/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace spe {

namespace {

constexpr double kNormTol = 1e-9;

void require_normalized_2q(const ComplexVector& state) {
  if (state.size() != 4) throw DimensionMismatch("expected a two-qubit state (4 amplitudes)");
  const double n = state.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "state is not normalized (norm " << n << ")";
    throw NotNormalized(os.str());
  }
}

}  // namespace

double MagicAmplitudes::product_defect() const {
  cplx s = 0;
  for (const cplx& p : phi) s += p * p;
  return std::abs(s);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionMismatch("density matrix must be square and non-empty");
  }
  if ((m_.rows() & (m_.rows() - 1)) != 0) {
    throw DimensionMismatch("density matrix dimension must be a power of two");
  }
  if (!is_hermitian(m_, tol)) throw NotPSD("density matrix is not Hermitian");
  const cplx tr = m_.trace();
  if (std::abs(tr - cplx(1.0)) > tol) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << ", expected 1";
    throw NotNormalized(os.str());
  }
  m_ = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << es.eigenvalues().minCoeff();
    throw NotPSD(os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > kNormTol) throw NotNormalized("pure state is not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

int DensityMatrix::num_qubits() const {
  int n = 0;
  while ((Eigen::Index{1} << n) < m_.rows()) ++n;
  return n;
}

MagicAmplitudes magic_amplitudes(const ComplexVector& state) {
  require_normalized_2q(state);
  const ComplexVector phi = magic_basis().adjoint() * state;
  MagicAmplitudes out;
  for (int j = 0; j < 4; ++j) out.phi[j] = phi(j);
  return out;
}

double e_measure(const ComplexVector& state) {
  return 0.5 * magic_amplitudes(state).product_defect();
}

double concurrence_pure(const ComplexVector& state) {
  return std::min(1.0, 2.0 * e_measure(state));
}

double concurrence_mixed(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionMismatch("concurrence requires a two-qubit density matrix");
  const ComplexMatrix yy = kron(pauli::Y(), pauli::Y());
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix tilde = yy * r.conjugate() * yy;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(r * tilde, false);
  if (es.info() != Eigen::Success) throw NoConvergence("concurrence: eigensolver failed");
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) {
    double v = es.eigenvalues()(i).real();
    if (v < 1e-12) v = 0.0;
    l[i] = std::sqrt(v);
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double linear_entropy(const ComplexVector& state) {
  if (state.size() != 4) throw DimensionMismatch("linear_entropy expects 4 amplitudes");
  // 1 - tr(rho_A^2) = 2 |a d - b c|^2 for psi = (a, b, c, d)
  const cplx det = state(0) * state(3) - state(1) * state(2);
  return 2.0 * std::norm(det);
}

double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("state_fidelity: dimension mismatch");
  const ComplexMatrix s = sqrtm_psd(rho.matrix());
  ComplexMatrix m = s * sigma.matrix() * s;
  m = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  // Eigenvalues that are zero in exact arithmetic come back at ~1e-17 and
  // would contribute ~1e-8 after the square root; drop them.
  const double floor = 1e-14 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  double tr = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > floor) tr += std::sqrt(l);
  }
  return std::clamp(tr * tr, 0.0, 1.0);
}

ComplexMatrix matrix_unit(int k) {
  if (k < 0 || k >= 16) throw InvalidArgument("matrix unit index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(k / 4, k % 4) = 1.0;
  return m;
}

const std::array<ComplexMatrix, 16>& two_qubit_paulis() {
  static const std::array<ComplexMatrix, 16> basis = [] {
    std::array<ComplexMatrix, 16> b;
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c)
        b[4 * a + c] = kron(pauli::from_char(letters[a]), pauli::from_char(letters[c]));
    return b;
  }();
  return basis;
}

GateFidelity average_gate_fidelity(std::span<const ComplexMatrix> channel_on_units,
                                   const Unitary2Q& u) {
  if (channel_on_units.size() != 16) {
    throw InvalidArgument("average_gate_fidelity needs exactly 16 channel outputs");
  }
  const ComplexMatrix& target = u.matrix();
  const auto& paulis = two_qubit_paulis();
  cplx sum = 0;
  for (int j = 0; j < 16; ++j) {
    const ComplexMatrix rotated = target * paulis[j].adjoint() * target.adjoint();
    for (int k = 0; k < 16; ++k) {
      // tr[rho_k^dagger U_j] picks out the (row, col) entry of U_j.
      const cplx coeff = paulis[j](k / 4, k % 4);
      if (coeff == cplx(0.0)) continue;
      sum += coeff * (rotated * channel_on_units[k]).trace();
    }
  }
  const cplx raw = (16.0 + sum) / 80.0;
  GateFidelity out;
  out.raw_real = raw.real();
  out.raw_imag = raw.imag();
  out.value = std::clamp(raw.real(), 0.0, 1.0);
  return out;
}

}  // namespace spe

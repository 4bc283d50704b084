#pragma once

// Dense complex linear algebra for the small matrices used throughout the
// toolkit (2x2 up to 2^n x 2^n with n <= ~10). Storage is Eigen; this header
// fixes the handful of operations and tolerances the rest of the code relies
// on.

#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "spe/error.hpp"

namespace spe {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Construction-time unitarity tolerance (Frobenius norm of U U^dagger - I).
inline constexpr double kUnitaryTol = 1e-10;
/// Tolerance for algebraic postconditions.
inline constexpr double kAlgebraTol = 1e-8;
inline constexpr double kPsdTol = 1e-9;

/// A 4x4 unitary in |q1 q0> order.
class Unitary2Q {
public:
  /// Throws NotUnitary when the Frobenius defect exceeds `tol`.
  explicit Unitary2Q(ComplexMatrix m, double tol = kUnitaryTol);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  operator const ComplexMatrix&() const noexcept { return m_; }

private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  ComplexVector values;
  ComplexMatrix vectors;  // orthonormal columns
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix identity(Eigen::Index dim);

double frobenius_norm(const ComplexMatrix& a);
double spectral_norm(const ComplexMatrix& a);

/// Max-abs entrywise comparison with an explicit tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// || a a^dagger - I ||_F
double unitarity_defect(const ComplexMatrix& a);
bool is_unitary(const ComplexMatrix& a, double tol = kUnitaryTol);
bool is_hermitian(const ComplexMatrix& a, double tol = kPsdTol);

/// Eigendecomposition of a normal matrix via the complex Schur form, whose
/// triangular factor is diagonal for normal input.
/// Throws NotNormal if || a a^dagger - a^dagger a ||_F > 1e-8.
EigenDecomposition eig_normal(const ComplexMatrix& a);

/// Principal square root of a Hermitian PSD matrix. Throws NotPSD.
ComplexMatrix sqrtm_psd(const ComplexMatrix& a);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
/// Single-qubit Pauli for 'I', 'X', 'Y' or 'Z'.
ComplexMatrix from_char(char c);
/// Tensor product of a Pauli string; leftmost character acts on the
/// highest-index qubit.
ComplexMatrix from_string(const std::string& s);
}  // namespace pauli

/// exp(i * phi * P) for an involutory P (P^2 = I), e.g. Pauli products.
ComplexMatrix exp_i_involutory(double phi, const ComplexMatrix& p);

/// Magic basis Q: columns are the Bell-like states Psi_1..Psi_4.
const ComplexMatrix& magic_basis();

/// Haar-random unitary from QR of a complex Ginibre matrix.
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng);
/// Haar-random pure state.
ComplexVector random_state(Eigen::Index dim, Rng& rng);
/// Random density matrix of the given rank (Wishart construction).
ComplexMatrix random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng);

}  // namespace spe

#pragma once

#include <array>
#include <span>

#include "spe/qmat.hpp"

namespace spe {

/// Amplitudes of a two-qubit pure state in the magic basis.
struct MagicAmplitudes {
  std::array<cplx, 4> phi{};

  /// |sum_j phi_j^2|; zero for product states.
  double product_defect() const;
};

/// A validated density matrix: Hermitian, unit trace, PSD (all within 1e-9).
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m, double tol = kPsdTol);

  static DensityMatrix from_pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  int num_qubits() const;

private:
  ComplexMatrix m_;
};

/// phi = Q^dagger psi. Throws NotNormalized.
MagicAmplitudes magic_amplitudes(const ComplexVector& state);

/// |E| = 1/2 |sum_j phi_j^2|, in [0, 0.5].
double e_measure(const ComplexVector& state);

double concurrence_pure(const ComplexVector& state);

/// Mixed-state concurrence from the eigenvalues of rho * rho_tilde.
double concurrence_mixed(const DensityMatrix& rho);

/// Linear entropy 1 - tr(rho_A^2) of the reduced state of a two-qubit pure
/// state. Equals concurrence^2 / 2.
double linear_entropy(const ComplexVector& state);

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// 4x4 matrix unit with a one at row-major position k (0-based, k < 16).
ComplexMatrix matrix_unit(int k);

/// The 16 two-qubit Pauli products in {I,X,Y,Z} x {I,X,Y,Z} row-major order.
const std::array<ComplexMatrix, 16>& two_qubit_paulis();

struct GateFidelity {
  double value = 0.0;  // clipped to [0, 1]
  double raw_real = 0.0;
  double raw_imag = 0.0;
};

/// Average gate fidelity of a channel given by its action on the 16 matrix
/// units, against target unitary `u`:
///   (16 + sum_{j,k} tr[rho_k^dagger U_j] tr[U U_j^dagger U^dagger E(rho_k)]) / 80
GateFidelity average_gate_fidelity(std::span<const ComplexMatrix> channel_on_units,
                                   const Unitary2Q& u);

}  // namespace spe

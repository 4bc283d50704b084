#pragma once

// Gate/circuit IR in |q_{n-1} ... q_0> order: qubit k is bit k of a basis
// index, and q_{n-1} is the leftmost tensor factor.
//
// Two-qubit gates carry a 4x4 matrix written in |q1 q0> order; the gate's
// qubit list maps the matrix's q0 to qubits[0] and its q1 to qubits[1].
// Controlled gates (CNOT, CRX) use qubits[0] as the control.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spe/qmat.hpp"
#include "spe/weyl.hpp"

namespace spe {

enum class GateKind {
  X,
  H,
  S,
  Sdg,
  RX,
  RY,
  RZ,
  U1Q,      // arbitrary 2x2 unitary
  CNOT,
  CRX,      // controlled e^{-i theta/2} R_X(-theta)
  ECR,
  CRPulse,  // exp(i theta (X (x) Z) / 8), one scaled cross-resonance half
  USPE,     // the SPE matrix U_SPE(theta) as a single block
};

std::string_view to_string(GateKind k);
GateKind gate_kind_from_string(std::string_view s);
bool is_parametric(GateKind k);
int arity(GateKind k);

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  double theta = 0.0;
  ComplexMatrix matrix;  // only for U1Q

  static Gate x(int q) { return {GateKind::X, {q}, 0.0, {}}; }
  static Gate h(int q) { return {GateKind::H, {q}, 0.0, {}}; }
  static Gate s(int q) { return {GateKind::S, {q}, 0.0, {}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}, 0.0, {}}; }
  static Gate rx(int q, double t) { return {GateKind::RX, {q}, t, {}}; }
  static Gate ry(int q, double t) { return {GateKind::RY, {q}, t, {}}; }
  static Gate rz(int q, double t) { return {GateKind::RZ, {q}, t, {}}; }
  static Gate u1q(int q, ComplexMatrix m) { return {GateKind::U1Q, {q}, 0.0, std::move(m)}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, 0.0, {}}; }
  static Gate crx(int control, int target, double t) {
    return {GateKind::CRX, {control, target}, t, {}};
  }
  static Gate ecr(int q0, int q1) { return {GateKind::ECR, {q0, q1}, 0.0, {}}; }
  static Gate cr_pulse(int q0, int q1, double t) { return {GateKind::CRPulse, {q0, q1}, t, {}}; }
  static Gate uspe(int q0, int q1, double t) { return {GateKind::USPE, {q0, q1}, t, {}}; }
};

/// The gate's own 2x2 or 4x4 matrix (|q1 q0> order for two-qubit gates).
ComplexMatrix gate_matrix(const Gate& g);

class Circuit {
public:
  explicit Circuit(int width);

  int width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Appends after validating qubit indices. Throws InvalidArgument.
  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);

  std::size_t count(GateKind k) const;

private:
  int width_;
  std::vector<Gate> gates_;
};

/// Full 2^n matrix of a 2x2 or 4x4 gate matrix placed on `qubits`.
ComplexMatrix embed(const ComplexMatrix& g, const std::vector<int>& qubits, int width);

ComplexMatrix compile_matrix(const Circuit& c);

/// Matrix of the SPE circuit: CNOT (control q1) after CRX (control q0).
Unitary2Q spe_matrix(double theta);

enum class SpeVariant { A, B, C, D };
SpeVariant spe_variant_from_char(char c);

/// The four circuits locally equivalent to SPEs (G1 = 0, G2 = cos theta).
/// (a) CRX[0,1] then CNOT[1,0]; (b) swaps control/target roles; (c) swaps
/// gate order; (d) both.
Circuit build_spe_circuit(SpeVariant v, double theta);

/// Images of |00>, |01>, |10>, |11> under the variant-(a) circuit.
std::array<ComplexVector, 4> simulate_basis_action(double theta);

/// e^{i pi XZ/8} (I (x) X) e^{-i pi XZ/8}; control is q0.
Unitary2Q ecr_matrix();
/// [ECR]^{theta/pi} = e^{i theta XZ/8} (I (x) X) e^{-i theta XZ/8}.
ComplexMatrix ecr_fraction(double theta);
/// Checks e^{i pi/4} CNOT = (I (x) X) ECR (e^{i pi X/4} (x) e^{i pi Z/4}).
bool cnot_identity_check(double tol = 1e-10);

/// Universal two-qubit circuit reaching the class (c1, c2, c3):
///   variant 1: SPE_a(c2), RY(c1) on q1, RY(-c3) on q0, SPE_c(c2)
///   variant 2: SPE_b(c2), RY(c1) on q1, RY(-c3) on q0, SPE_d(c2)
/// Throws InvalidArgument for points outside the chamber.
Circuit build_utqqc(int variant, const CartanCoordinates& c);

/// (n-1) USPE(pi/2) blocks producing
///   e^{-i pi/4}/sqrt2 (|0 1...1> + i |1 0...0>).
Circuit build_ghz(int n);
/// X on q0 then USPE(pi/2) on (q0,q1), (q1,q2), ... : perfect W state.
Circuit build_w(int n);

/// Reference output states of build_ghz / build_w on |0...0>.
ComplexVector ghz_target(int n);
ComplexVector w_target(int n);

}  // namespace spe

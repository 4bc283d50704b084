#include "doctest.h"

#include "oracles.hpp"
#include "spe/circuits.hpp"
#include "spe/entanglement.hpp"
#include "spe/gates.hpp"

using namespace spe;

namespace {

ComplexVector ket(std::initializer_list<cplx> a) {
  ComplexVector v(static_cast<Eigen::Index>(a.size()));
  Eigen::Index i = 0;
  for (auto x : a) v(i++) = x;
  return v;
}

const double s2 = 1.0 / std::sqrt(2.0);

// Channel outputs on the 16 matrix units for rho -> (1-p) U rho U^dag + p tr(rho) I/4.
std::vector<ComplexMatrix> depolarized_units(const ComplexMatrix& u, double p) {
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < 16; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    e(k / 4, k % 4) = 1.0;
    out.push_back((1 - p) * u * e * u.adjoint() + p * e.trace() * identity(4) / 4.0);
  }
  return out;
}

}  // namespace

TEST_CASE("magic amplitudes") {
  auto bell = magic_amplitudes(ket({s2, 0, 0, s2}));
  CHECK(std::abs(bell.phi[0] - cplx(1, 0)) < 1e-12);
  for (int j = 1; j < 4; ++j) CHECK(std::abs(bell.phi[j]) < 1e-12);

  auto z = magic_amplitudes(ket({1, 0, 0, 0}));
  CHECK(std::abs(z.phi[0] - cplx(s2, 0)) < 1e-12);
  CHECK(std::abs(z.phi[1]) < 1e-12);
  CHECK(std::abs(z.phi[2]) < 1e-12);
  CHECK(std::abs(z.phi[3] - cplx(0, -s2)) < 1e-12);

  auto o = magic_amplitudes(ket({0, 1, 0, 0}));
  CHECK(std::abs(o.phi[0]) < 1e-12);
  CHECK(std::abs(o.phi[1] - cplx(0, -s2)) < 1e-12);
  CHECK(std::abs(o.phi[2] - cplx(s2, 0)) < 1e-12);
  CHECK(std::abs(o.phi[3]) < 1e-12);
  CHECK(o.product_defect() < 1e-12);

  CHECK_THROWS_AS(magic_amplitudes(ket({1, 1, 0, 0})), NotNormalized);
}

TEST_CASE("E-measure") {
  CHECK(e_measure(ket({1, 0, 0, 0})) < 1e-15);
  CHECK(e_measure(ket({s2, 0, 0, s2})) == doctest::Approx(0.5));
  const double a = std::cos(kPi / 8), b = std::sin(kPi / 8);
  CHECK(e_measure(ket({0, a, b, 0})) == doctest::Approx(0.5 * std::sin(kPi / 4)).epsilon(1e-12));
  CHECK(e_measure(ket({0, a, b, 0})) == doctest::Approx(0.35355339).epsilon(1e-7));

  Rng rng(20);
  for (int i = 0; i < 200; ++i) {
    ComplexVector psi = random_state(4, rng);
    ComplexVector dressed = kron(random_unitary(2, rng), random_unitary(2, rng)) * psi;
    CHECK(e_measure(dressed) == doctest::Approx(e_measure(psi)).epsilon(1e-9));
  }
}

TEST_CASE("concurrence") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    ComplexVector psi = random_state(4, rng);
    CHECK(std::abs(concurrence_pure(psi) - 2 * e_measure(psi)) < 1e-9);
    CHECK(std::abs(concurrence_pure(psi) - oracle::concurrence_pure(psi)) < 1e-9);
  }
  for (int i = 0; i < 50; ++i) {
    ComplexVector psi = random_state(4, rng);
    CHECK(std::abs(concurrence_mixed(DensityMatrix::from_pure(psi)) - concurrence_pure(psi)) < 1e-6);
    DensityMatrix r(random_density(4, 1 + i % 4, rng));
    CHECK(std::abs(concurrence_mixed(r) - oracle::concurrence_hermitian(r.matrix())) < 1e-6);
  }
  CHECK(concurrence_mixed(DensityMatrix::from_pure(ket({s2, 0, 0, s2}))) == doctest::Approx(1.0));
  CHECK(concurrence_mixed(DensityMatrix::maximally_mixed(4)) == doctest::Approx(0.0));

  for (int k = 1; k <= 9; ++k) {
    const double t = k * kPi / 10;
    ComplexVector out = spe_matrix(t).matrix() * ket({0, 0, 0, 1});
    CHECK(concurrence_pure(out) == doctest::Approx(std::sin(t)).epsilon(1e-12));
  }
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(identity(4)), InvalidArgument);  // trace 4
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, NotPSD);
  CHECK_THROWS_AS(DensityMatrix(identity(3) / 3.0), DimensionMismatch);
  CHECK(DensityMatrix::maximally_mixed(8).num_qubits() == 3);
}

TEST_CASE("state fidelity") {
  Rng rng(22);
  DensityMatrix r(random_density(4, 2, rng));
  CHECK(state_fidelity(r, r) == doctest::Approx(1.0).epsilon(1e-9));

  auto p00 = DensityMatrix::from_pure(ket({1, 0, 0, 0}));
  auto p11 = DensityMatrix::from_pure(ket({0, 0, 0, 1}));
  CHECK(state_fidelity(p00, p11) < 1e-12);

  for (int n = 1; n <= 3; ++n) {
    ComplexVector z = ComplexVector::Zero(1 << n);
    z(0) = 1.0;
    CHECK(state_fidelity(DensityMatrix::from_pure(z), DensityMatrix::maximally_mixed(1 << n)) ==
          doctest::Approx(1.0 / (1 << n)).epsilon(1e-10));
  }
  for (int i = 0; i < 50; ++i) {
    ComplexVector a = random_state(4, rng), b = random_state(4, rng);
    const double ov = std::norm(a.dot(b));
    CHECK(state_fidelity(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b)) == doctest::Approx(ov).epsilon(1e-8));
    DensityMatrix x(random_density(4, 3, rng)), y(random_density(4, 2, rng));
    CHECK(std::abs(state_fidelity(x, y) - state_fidelity(y, x)) < 1e-8);
  }
  CHECK_THROWS_AS(state_fidelity(p00, DensityMatrix::maximally_mixed(2)), DimensionMismatch);
}

TEST_CASE("pauli ordering for gate fidelity") {
  const auto& ps = two_qubit_paulis();
  CHECK(approx_equal(ps[0], identity(4), 0));
  CHECK(approx_equal(ps[1], kron(pauli::I(), pauli::X()), 0));
  CHECK(approx_equal(ps[4], kron(pauli::X(), pauli::I()), 0));
  CHECK(approx_equal(ps[15], kron(pauli::Z(), pauli::Z()), 0));
  CHECK(matrix_unit(6)(1, 2) == cplx(1, 0));
}

TEST_CASE("average gate fidelity") {
  Unitary2Q b = named_gate("b");
  auto ideal = depolarized_units(b.matrix(), 0.0);
  auto f = average_gate_fidelity(ideal, b);
  CHECK(f.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(f.raw_imag) < 1e-12);

  for (double p : {0.02, 0.1, 0.3}) {
    auto ch = depolarized_units(b.matrix(), p);
    const double got = average_gate_fidelity(ch, b).value;
    CHECK(got == doctest::Approx(1 - 0.75 * p).epsilon(1e-12));
    auto channel = [&](const ComplexMatrix& rho) -> ComplexMatrix {
      return (1 - p) * b.matrix() * rho * b.matrix().adjoint() + p * rho.trace() * identity(4) / 4.0;
    };
    CHECK(std::abs(oracle::average_fidelity_mc(channel, b.matrix(), 20000, 5) - got) < 0.01);
  }

  // affine in the channel, including a non-physical transpose map
  Rng rng(23);
  Unitary2Q u(random_unitary(4, rng));
  std::vector<ComplexMatrix> e1, e2, mix;
  const double lam = 0.37;
  for (int k = 0; k < 16; ++k) {
    e1.push_back(matrix_unit(k).transpose());
    e2.push_back(u.matrix() * matrix_unit(k) * u.matrix().adjoint());
    mix.push_back(lam * e1.back() + (1 - lam) * e2.back());
  }
  auto f1 = average_gate_fidelity(e1, u), f2 = average_gate_fidelity(e2, u), fm = average_gate_fidelity(mix, u);
  CHECK(fm.raw_real == doctest::Approx(lam * f1.raw_real + (1 - lam) * f2.raw_real).epsilon(1e-9));

  std::vector<ComplexMatrix> short_list(15, identity(4));
  CHECK_THROWS_AS(average_gate_fidelity(short_list, u), InvalidArgument);
}

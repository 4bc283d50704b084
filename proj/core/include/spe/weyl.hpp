#pragma once

// Nonlocal analysis of two-qubit gates.
//
// Conventions: U = e^{i alpha} k1 U_d(c) k2 with
//   U_d(c) = exp(i/2 (c1 XX + c2 YY + c3 ZZ)),
// which is diagonal in the magic basis with eigenvalues e^{i h_j / 2},
//   h = (c1 - c2 + c3, c1 + c2 - c3, -c1 - c2 - c3, -c1 + c2 + c3).
// Canonical coordinates satisfy pi/2 >= c1 >= c2 >= |c3| >= 0; on the face
// c1 = pi/2 the points (pi/2, c2, c3) and (pi/2, c2, -c3) are the same class
// and the representative with c3 >= 0 is returned.

#include <array>
#include <cstdint>
#include <vector>

#include "spe/qmat.hpp"

namespace spe {

struct CartanCoordinates {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

struct LocalInvariants {
  cplx g1{0.0, 0.0};
  double g2 = 0.0;
  /// Imaginary part of G2 before projection to the reals.
  double g2_imag = 0.0;
};

struct HSpectrum {
  std::array<double, 4> h{};
  double sum() const { return h[0] + h[1] + h[2] + h[3]; }
};

struct Chord {
  int j = 0;  // 1-based, j < k
  int k = 0;
  double length = 0.0;
};

/// Six chords over pairs (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
struct ChordSet {
  std::array<Chord, 6> chords{};
  double length(int j, int k) const;
};

struct KakDecomposition {
  ComplexMatrix k1_left;   // acts on q1, applied last
  ComplexMatrix k1_right;  // acts on q0, applied last
  ComplexMatrix k2_left;   // acts on q1, applied first
  ComplexMatrix k2_right;  // acts on q0, applied first
  CartanCoordinates cartan;
  double global_phase = 0.0;

  ComplexMatrix reassemble() const;
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Product-state pair (Psi_j +/- i Psi_k)/sqrt(2) built from magic-basis states,
/// in computational amplitudes.
struct ProductPair {
  int j = 0;  // 1-based
  int k = 0;
  ComplexVector plus;
  ComplexVector minus;
};

struct ArgandChord {
  int j = 0;
  int k = 0;
  cplx from;
  cplx to;
  double length = 0.0;
};

struct ArgandData {
  std::array<cplx, 4> points{};
  std::array<ArgandChord, 6> chords{};
};

/// All six (j, k) pairs in canonical order, 1-based.
const std::array<std::pair<int, int>, 6>& chord_pairs();

/// U_d(c) in |q1 q0> order.
ComplexMatrix nonlocal_gate(const CartanCoordinates& c);

/// Q^dagger U Q.
ComplexMatrix magic_transform(const Unitary2Q& u);
/// m(U) = (Q^dagger U Q)^T (Q^dagger U Q).
ComplexMatrix makhlin_matrix(const Unitary2Q& u);

LocalInvariants local_invariants(const Unitary2Q& u);
LocalInvariants invariants_from_cartan(const CartanCoordinates& c);

HSpectrum h_spectrum(const CartanCoordinates& c);

/// Map any coordinate triple to its canonical Weyl-chamber representative.
CartanCoordinates canonicalize(const CartanCoordinates& c);
bool in_chamber(const CartanCoordinates& c, double tol = 1e-12);

CartanCoordinates cartan_coordinates(const Unitary2Q& u);

ChordSet chord_lengths(const CartanCoordinates& c);
/// Closed form of the mean squared chord length.
double mean_squared_chord(const CartanCoordinates& c);
/// Closed-form entangling power; max 2/9.
double entangling_power(const CartanCoordinates& c);
MonteCarloEstimate entangling_power_mc(const Unitary2Q& u, std::uint64_t samples,
                                       std::uint64_t seed);

bool is_perfect_entangler(const CartanCoordinates& c);
bool is_spe(const CartanCoordinates& c);

std::vector<ProductPair> theorem1_pairs(const CartanCoordinates& c);

KakDecomposition kak_decompose(const Unitary2Q& u);

ArgandData argand_data(const CartanCoordinates& c);

}  // namespace spe

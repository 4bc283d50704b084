#pragma once

// Simulated Pauli-basis state tomography and the 16-input process
// tomography pipeline.
//
// A setting is an n-letter string over {X, Y, Z}; character 0 refers to the
// highest-index qubit, matching bitstring order. Before measuring, X is
// rotated with H and Y with S^dagger then H, so outcome 0 always means the
// +1 eigenstate.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spe/simulator.hpp"

namespace spe {

inline constexpr int kMaxTomographyQubits = 4;

struct TomographyRecord {
  std::string setting;
  CountsTable counts;
};

std::vector<std::string> qst_settings(int n);

/// Basis-change gates that precede a Z measurement for `setting`.
Circuit measurement_rotation(const std::string& setting);

/// Runs `circuit` on `input` (with gate noise), then measures every setting.
/// Per-setting seeds are seed + setting index.
std::vector<TomographyRecord> collect(const Circuit& circuit, const DensityMatrix& input,
                                      const std::vector<std::string>& settings, Shots shots,
                                      const NoiseModel& noise, std::uint64_t seed);

/// Records for an already prepared state.
std::vector<TomographyRecord> collect_state(const DensityMatrix& state,
                                            const std::vector<std::string>& settings,
                                            Shots shots, const NoiseModel& noise,
                                            std::uint64_t seed);

/// rho = 2^-n sum_P <P> P over all 4^n Pauli strings. Expectations of strings
/// containing I average over every setting that extends them.
ComplexMatrix linear_inversion(const std::vector<TomographyRecord>& records);

/// Closest spectrum with non-negative entries and unit sum, by the
/// ascending-sweep deficit redistribution. Input is sorted internally;
/// output follows the input order.
std::vector<double> project_spectrum(const std::vector<double>& eigenvalues);

/// Maximum-likelihood physical state for a Hermitian unit-trace estimate.
/// Throws InvalidArgument if the trace differs from 1 by more than 1e-6.
DensityMatrix mle_project(const ComplexMatrix& h);

/// Full QST: collect, invert, project.
DensityMatrix reconstruct_state(const Circuit& circuit, const DensityMatrix& input, Shots shots,
                                const NoiseModel& noise, std::uint64_t seed);

/// The 16 product inputs {|0>, |1>, |+>, |+i>}^(x)2, index = 4*a + b with a
/// the state of q1 and b the state of q0.
const std::array<ComplexVector, 16>& process_inputs();

struct ProcessTomographyResult {
  std::array<ComplexMatrix, 16> channel_on_units;
  std::vector<DensityMatrix> outputs;  // reconstructed output per physical input
  double condition_number = 0.0;
};

/// E(rho_k) for the 16 matrix units of a two-qubit channel, from QST of the
/// outputs for the 16 physical inputs and the change of basis between them.
ProcessTomographyResult process_tomography(const Circuit& circuit, Shots shots,
                                           const NoiseModel& noise, std::uint64_t seed);

/// Coefficients c with rho_k = sum_a c(k, a) |in_a><in_a|, and the condition
/// number of the input span.
struct UnitExpansion {
  Eigen::MatrixXcd coefficients;  // 16 x 16, row k
  double condition_number = 0.0;
};
const UnitExpansion& matrix_unit_expansion();

}  // namespace spe

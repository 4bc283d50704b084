#pragma once

// Statevector / density-matrix evolution with a simple noise model.
//
// Noise: a depolarizing channel acts after every gate on exactly that gate's
// qubits (depol_1q or depol_2q), an optional global depolarizing channel acts
// once on all qubits after the whole circuit, and readout bit flips act only
// at sampling time.
//
// Bitstrings are written |q_{n-1} ... q_0>: the leftmost character is the
// highest-index qubit.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spe/circuits.hpp"
#include "spe/entanglement.hpp"

namespace spe {

struct NoiseModel {
  double depol_1q = 0.0;
  double depol_2q = 0.0;
  double depol_global = 0.0;
  double readout_flip_0to1 = 0.0;
  double readout_flip_1to0 = 0.0;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless every probability is in [0, 1].
  void validate() const;
  bool gate_noiseless() const;
  bool readout_noiseless() const;
};

/// Number of shots, or std::nullopt for exact Born probabilities.
using Shots = std::optional<std::uint64_t>;

struct CountsTable {
  int width = 0;
  /// 0 in exact mode.
  std::uint64_t shots = 0;
  bool exact = false;
  /// Indexed by basis index; empty in exact mode.
  std::vector<std::uint64_t> counts;
  /// Born probabilities (exact) or observed frequencies (sampled).
  std::vector<double> probabilities;

  double probability(const std::string& bitstring) const;
  std::map<std::string, std::uint64_t> count_map() const;
  std::map<std::string, double> probability_map() const;
};

std::string to_bitstring(std::uint64_t index, int width);
std::uint64_t from_bitstring(const std::string& bits);

/// Computational basis state |bits>.
ComplexVector basis_state(const std::string& bits);

/// Applies a 2x2 or 4x4 gate matrix in place.
void apply_gate(ComplexVector& state, const ComplexMatrix& g, const std::vector<int>& qubits);

ComplexVector run_state(const Circuit& c, const ComplexVector& input);

DensityMatrix run_density(const Circuit& c, const DensityMatrix& rho,
                          const NoiseModel& noise = {});

/// (1-p) rho + p (I/d on `qubits`) (x) tr_qubits(rho).
ComplexMatrix depolarize(const ComplexMatrix& rho, const std::vector<int>& qubits, double p);

std::vector<double> born_probabilities(const ComplexVector& state);
std::vector<double> born_probabilities(const DensityMatrix& rho);

/// Classical per-qubit bit-flip channel on a distribution over bitstrings.
std::vector<double> apply_readout(const std::vector<double>& probs, int width,
                                  const NoiseModel& noise);

/// Born probabilities composed with readout noise; a multinomial draw of
/// `shots` samples when shots is set, the exact distribution otherwise.
CountsTable sample_counts(const std::vector<double>& born, int width, Shots shots,
                          const NoiseModel& noise, std::uint64_t seed);
CountsTable sample_counts(const ComplexVector& state, Shots shots, const NoiseModel& noise,
                          std::uint64_t seed);
CountsTable sample_counts(const DensityMatrix& rho, Shots shots, const NoiseModel& noise,
                          std::uint64_t seed);

}  // namespace spe

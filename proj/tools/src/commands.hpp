#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace spe::cli {

/// Shot settings shared by the sampling commands. `exact` wins over `shots`.
struct Sampling {
  bool exact = false;
  std::uint64_t shots = 8192;
  std::string noise_path;
  std::uint64_t seed = 0;

  Shots resolved() const { return exact ? Shots{} : Shots{shots}; }
  NoiseModel noise() const;
};

struct GateSource {
  std::string name;
  std::string matrix_path;
};

Unitary2Q load_gate(const GateSource& src);

json cmd_analyze(const GateSource& src, std::uint64_t mc_samples, std::uint64_t seed);
void cmd_argand(const GateSource& src, std::ostream& out);

struct MetricsOptions {
  std::string state_path;
  std::string rho_path;
  std::string reference_path;
};
json cmd_metrics(const MetricsOptions& o);

struct BuildOptions {
  std::string kind;
  std::string variant;
  std::vector<std::string> params;
};
json cmd_circuit_build(const BuildOptions& o);
json cmd_circuit_compile(const std::string& circuit_path);

json cmd_simulate(const std::string& circuit_path, const std::string& input, const Sampling& s);

struct SweepOptions {
  std::string experiment;
  int points = 9;
  std::string theta_min = "0.1pi";
  std::string theta_max = "0.9pi";
  std::string input;  // default depends on the experiment
};
void cmd_sweep(const SweepOptions& o, const Sampling& s, std::ostream& out);

json cmd_tomo(const std::string& circuit_path, const std::string& input, const Sampling& s,
              const std::string& records_path);
json cmd_gatefid(const std::string& circuit_path, const std::string& target, const Sampling& s);
json cmd_states(const std::string& kind, int n, const Sampling& s);

json cmd_pulse_area(const std::string& pulse_path);
json cmd_pulse_scale(const std::string& pulse_path, const std::string& theta);
json cmd_pulse_schedule(const std::string& calib_path, const std::string& theta);

/// Fixed-format number for CSV output: '.' decimal regardless of locale.
std::string csv_number(double x);

}  // namespace spe::cli

// spetool: command-line front end for the spe library.
//
// Exit codes: 0 success, 2 bad input or usage, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using spe::cli::json;

constexpr int kUserError = 2;
constexpr int kNumericalError = 3;

struct Emit {
  std::string output;

  void text(const std::string& s) const {
    if (output.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(output);
    if (!f) throw spe::InvalidArgument("cannot write '" + output + "'");
    f << s;
  }

  void object(json j, const std::string& command, std::uint64_t seed) const {
    j["version"] = SPE_VERSION;
    j["seed"] = seed;
    j["command"] = command;
    text(j.dump(2) + "\n");
  }
};

void add_sampling(CLI::App* cmd, spe::cli::Sampling& s) {
  auto* exact = cmd->add_flag("--exact", s.exact, "Use Born probabilities instead of sampling");
  cmd->add_option("--shots", s.shots, "Shots per measurement setting")->check(CLI::PositiveNumber)->excludes(exact);
  cmd->add_option("--noise", s.noise_path, "Noise model JSON");
  cmd->add_option("--seed", s.seed, "Random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit gate analysis, SPE circuits, simulated tomography and pulse scaling", "spetool"};
  app.set_version_flag("--version", SPE_VERSION);
  app.require_subcommand(1);
  app.fallthrough();  // lets -o appear after the subcommand

  Emit emit;
  app.add_option("-o,--output", emit.output, "Write output to a file instead of stdout");

  std::function<void()> action;

  // analyze / argand
  spe::cli::GateSource gate;
  std::uint64_t mc_samples = 0, analyze_seed = 0;
  auto* analyze = app.add_subcommand("analyze", "Invariants, Cartan coordinates and entangling power of a gate");
  analyze->add_option("--gate", gate.name, "Named gate: identity, cnot, cnot01, ecr, swap, iswap, dcnot, b, spe:<angle>");
  analyze->add_option("--matrix", gate.matrix_path, "4x4 matrix JSON");
  analyze->add_option("--mc-samples", mc_samples, "Also estimate entangling power by sampling");
  analyze->add_option("--seed", analyze_seed, "Seed for --mc-samples");
  analyze->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_analyze(gate, mc_samples, analyze_seed), "analyze", analyze_seed); };
  });

  auto* argand = app.add_subcommand("argand", "Argand-diagram points and chords as CSV");
  argand->add_option("--gate", gate.name, "Named gate");
  argand->add_option("--matrix", gate.matrix_path, "4x4 matrix JSON");
  argand->callback([&] {
    action = [&] {
      std::ostringstream os;
      spe::cli::cmd_argand(gate, os);
      emit.text(os.str());
    };
  });

  // metrics
  spe::cli::MetricsOptions metrics_opts;
  auto* metrics = app.add_subcommand("metrics", "E-measure, concurrence or fidelity of states");
  metrics->add_option("--state", metrics_opts.state_path, "Pure state JSON (column matrix)");
  metrics->add_option("--rho", metrics_opts.rho_path, "Density matrix JSON");
  metrics->add_option("--reference", metrics_opts.reference_path, "Second state or density matrix for fidelity");
  metrics->callback([&] { action = [&] { emit.object(spe::cli::cmd_metrics(metrics_opts), "metrics", 0); }; });

  // circuit build | compile
  auto* circuit = app.add_subcommand("circuit", "Build or compile circuits");
  circuit->require_subcommand(1);
  spe::cli::BuildOptions build_opts;
  auto* build = circuit->add_subcommand("build", "Emit circuit JSON");
  build->add_option("--kind", build_opts.kind, "spe | utqqc | ghz | w")->required();
  build->add_option("--variant", build_opts.variant, "spe: a|b|c|d, utqqc: 1|2");
  build->add_option("--params", build_opts.params, "spe: theta; utqqc: c1,c2,c3; ghz/w: n")->delimiter(',');
  build->callback([&] { action = [&] { emit.object(spe::cli::cmd_circuit_build(build_opts), "circuit build", 0); }; });

  std::string circuit_path;
  auto* compile = circuit->add_subcommand("compile", "Emit the circuit unitary as matrix JSON");
  compile->add_option("--circuit", circuit_path, "Circuit JSON")->required();
  compile->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_circuit_compile(circuit_path), "circuit compile", 0); };
  });

  // simulate
  spe::cli::Sampling sampling;
  std::string input;
  auto* simulate = app.add_subcommand("simulate", "Run a circuit on a basis state and report counts");
  simulate->add_option("--circuit", circuit_path, "Circuit JSON")->required();
  simulate->add_option("--input", input, "Input bitstring, q_{n-1} first")->required();
  add_sampling(simulate, sampling);
  simulate->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_simulate(circuit_path, input, sampling), "simulate", sampling.seed); };
  });

  // sweep
  spe::cli::SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Theta sweeps of the basis-probability and tomography experiments (CSV)");
  sweep->add_option("--experiment", sweep_opts.experiment, "fig7 | fig8")->required();
  sweep->add_option("--points", sweep_opts.points, "Grid size (>= 2)");
  sweep->add_option("--theta-min", sweep_opts.theta_min, "First grid angle");
  sweep->add_option("--theta-max", sweep_opts.theta_max, "Last grid angle");
  sweep->add_option("--input", sweep_opts.input, "Input bitstring (fig7: 01, fig8: 11 by default)");
  add_sampling(sweep, sampling);
  sweep->callback([&] {
    action = [&] {
      std::ostringstream os;
      spe::cli::cmd_sweep(sweep_opts, sampling, os);
      emit.text(os.str());
    };
  });

  // tomo
  std::string records_path;
  auto* tomo = app.add_subcommand("tomo", "State tomography of a circuit output with MLE reconstruction");
  tomo->add_option("--circuit", circuit_path, "Circuit JSON")->required();
  tomo->add_option("--input", input, "Input bitstring")->required();
  tomo->add_option("--records", records_path, "Write measurement records as JSON lines");
  add_sampling(tomo, sampling);
  tomo->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_tomo(circuit_path, input, sampling, records_path), "tomo", sampling.seed); };
  });

  // gatefid
  std::string target;
  auto* gatefid = app.add_subcommand("gatefid", "Average gate fidelity from simulated process tomography");
  gatefid->add_option("--circuit", circuit_path, "Two-qubit circuit JSON")->required();
  gatefid->add_option("--target", target, "Named target gate")->required();
  add_sampling(gatefid, sampling);
  gatefid->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_gatefid(circuit_path, target, sampling), "gatefid", sampling.seed); };
  });

  // states
  std::string state_kind;
  int n_qubits = 0;
  auto* states = app.add_subcommand("states", "GHZ-class and perfect W state generation reports");
  states->add_option("--kind", state_kind, "ghz | w")->required();
  states->add_option("--n", n_qubits, "Number of qubits")->required();
  add_sampling(states, sampling);
  states->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_states(state_kind, n_qubits, sampling), "states", sampling.seed); };
  });

  // pulse area | scale | schedule
  auto* pulse = app.add_subcommand("pulse", "Gaussian-square pulse area, scaling and schedule timing");
  pulse->require_subcommand(1);
  std::string pulse_path, calib_path, theta = "pi";
  auto* area = pulse->add_subcommand("area", "Closed-form pulse area");
  area->add_option("--pulse", pulse_path, "Pulse JSON")->required();
  area->callback([&] { action = [&] { emit.object(spe::cli::cmd_pulse_area(pulse_path), "pulse area", 0); }; });
  auto* scale = pulse->add_subcommand("scale", "Rescale a calibrated pi pulse to theta");
  scale->add_option("--pulse", pulse_path, "Pulse JSON")->required();
  scale->add_option("--theta", theta, "Target angle, e.g. 0.5pi")->required();
  scale->callback([&] { action = [&] { emit.object(spe::cli::cmd_pulse_scale(pulse_path, theta), "pulse scale", 0); }; });
  auto* schedule = pulse->add_subcommand("schedule", "Duration of the scaled SPE schedule vs two full ECRs");
  schedule->add_option("--calib", calib_path, "Calibration JSON")->required();
  schedule->add_option("--theta", theta, "Target angle")->required();
  schedule->callback([&] {
    action = [&] { emit.object(spe::cli::cmd_pulse_schedule(calib_path, theta), "pulse schedule", 0); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUserError;
  }

  try {
    if (action) action();
    return 0;
  } catch (const spe::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const spe::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUserError;
  }
}

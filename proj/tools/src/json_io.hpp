#pragma once

// JSON encodings shared by the CLI commands.
//
//   matrix  {"rows": r, "cols": c, "data": [[re, im], ...]}  row-major
//   circuit {"width": n, "gates": [{"kind": "CRX", "theta": t, "qubits": [0, 1]}, ...]}
//   pulse   {"amp": [re, im], "sigma": s, "width": w, "duration": d}

#include <filesystem>
#include <string>

#include "json.hpp"
#include "spe/circuits.hpp"
#include "spe/pulse.hpp"
#include "spe/simulator.hpp"
#include "spe/tomography.hpp"

namespace spe::cli {

using json = nlohmann::json;

/// Reads and parses a JSON file; throws InvalidArgument on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);

json to_json(cplx z);
cplx complex_from_json(const json& j);

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);
/// Accepts a column matrix (cols = 1) or a bare [[re, im], ...] list.
ComplexVector vector_from_json(const json& j);

json gate_to_json(const Gate& g);
Gate gate_from_json(const json& j);
json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

NoiseModel noise_from_json(const json& j);
json noise_to_json(const NoiseModel& n);

json pulse_to_json(const GaussianSquarePulse& p);
GaussianSquarePulse pulse_from_json(const json& j);
Calibration calibration_from_json(const json& j);
json schedule_entry_to_json(const ScheduleEntry& e);

json counts_to_json(const CountsTable& c);
/// One tomography record per line.
json record_to_json(const TomographyRecord& r);

}  // namespace spe::cli

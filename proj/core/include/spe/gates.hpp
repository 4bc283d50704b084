#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spe/qmat.hpp"

namespace spe {

/// Parses an angle: plain radians ("1.5708"), multiples of pi ("0.5pi",
/// "pi", "-pi"), or fractions of pi ("pi/2", "3pi/4").
double parse_angle(std::string_view text);

/// Named two-qubit gates: identity, cnot, cnot01, ecr, swap, iswap, dcnot,
/// b, spe:<angle>.
Unitary2Q named_gate(std::string_view name);

std::vector<std::string> named_gate_list();

}  // namespace spe

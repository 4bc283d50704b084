#include "spe/gates.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "spe/circuits.hpp"

namespace spe {

namespace {

double parse_number(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InvalidArgument("cannot parse angle '" + std::string(whole) + "'");
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("cannot parse angle '" + std::string(whole) + "'");
  }
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s = lower(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_number(s, text);

  std::string_view head(s.data(), pos);
  std::string_view tail(s.data() + pos + 2, s.size() - pos - 2);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  double coeff = 1.0;
  if (head == "-") {
    coeff = -1.0;
  } else if (head == "+") {
    coeff = 1.0;
  } else if (!head.empty()) {
    coeff = parse_number(head, text);
  }
  double denom = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw InvalidArgument("cannot parse angle '" + std::string(text) + "'");
    denom = parse_number(tail.substr(1), text);
    if (denom == 0.0) throw InvalidArgument("division by zero in angle '" + std::string(text) + "'");
  }
  return coeff * kPi / denom;
}

namespace {

ComplexMatrix placed(const Gate& g) { return embed(gate_matrix(g), g.qubits, 2); }

}  // namespace

Unitary2Q named_gate(std::string_view name) {
  const std::string n = lower(name);
  if (n == "identity" || n == "id" || n == "i") return Unitary2Q(identity(4));
  // Textbook CNOT: control on the left (q1) qubit.
  if (n == "cnot" || n == "cx") return Unitary2Q(placed(Gate::cnot(1, 0)));
  if (n == "cnot01") return Unitary2Q(placed(Gate::cnot(0, 1)));
  if (n == "ecr") return ecr_matrix();
  if (n == "swap") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
    return Unitary2Q(m);
  }
  if (n == "iswap") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = 1;
    m(1, 2) = m(2, 1) = kI;
    return Unitary2Q(m);
  }
  if (n == "dcnot") {
    return Unitary2Q(placed(Gate::cnot(1, 0)) * placed(Gate::cnot(0, 1)));
  }
  if (n == "b") return spe_matrix(kPi / 2);
  if (n.rfind("spe:", 0) == 0) return spe_matrix(parse_angle(n.substr(4)));
  throw InvalidArgument("unknown gate name '" + std::string(name) + "'");
}

std::vector<std::string> named_gate_list() {
  return {"identity", "cnot", "cnot01", "ecr", "swap", "iswap", "dcnot", "b", "spe:<angle>"};
}

}  // namespace spe

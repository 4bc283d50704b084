#include "spe/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spe {

namespace {

struct KindName {
  GateKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GateKind::X, "X"},       {GateKind::H, "H"},         {GateKind::S, "S"},
    {GateKind::Sdg, "SDG"},   {GateKind::RX, "RX"},       {GateKind::RY, "RY"},
    {GateKind::RZ, "RZ"},     {GateKind::U1Q, "U1Q"},     {GateKind::CNOT, "CNOT"},
    {GateKind::CRX, "CRX"},   {GateKind::ECR, "ECR"},     {GateKind::CRPulse, "CRPULSE"},
    {GateKind::USPE, "USPE"},
};

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Controlled-t with control q0, target q1, in |q1 q0> order.
ComplexMatrix controlled_on_q0(const ComplexMatrix& t) {
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  return kron(identity(2), p0) + kron(t, p1);
}

ComplexMatrix xz() { return kron(pauli::X(), pauli::Z()); }

}  // namespace

std::string_view to_string(GateKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

GateKind gate_kind_from_string(std::string_view s) {
  std::string up(s);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (const auto& kn : kKindNames)
    if (kn.name == up) return kn.kind;
  throw InvalidArgument("unknown gate kind '" + std::string(s) + "'");
}

bool is_parametric(GateKind k) {
  switch (k) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRX:
    case GateKind::CRPulse:
    case GateKind::USPE:
      return true;
    default:
      return false;
  }
}

int arity(GateKind k) {
  switch (k) {
    case GateKind::CNOT:
    case GateKind::CRX:
    case GateKind::ECR:
    case GateKind::CRPulse:
    case GateKind::USPE:
      return 2;
    default:
      return 1;
  }
}

ComplexMatrix gate_matrix(const Gate& g) {
  const double t = g.theta;
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::X: return pauli::X();
    case GateKind::H: return mat2(r2, r2, r2, -r2);
    case GateKind::S: return mat2(1, 0, 0, kI);
    case GateKind::Sdg: return mat2(1, 0, 0, -kI);
    case GateKind::RX: return exp_i_involutory(-t / 2, pauli::X());
    case GateKind::RY: return exp_i_involutory(-t / 2, pauli::Y());
    case GateKind::RZ: return exp_i_involutory(-t / 2, pauli::Z());
    case GateKind::U1Q:
      if (g.matrix.rows() != 2 || g.matrix.cols() != 2 || !is_unitary(g.matrix, 1e-9)) {
        throw InvalidArgument("U1Q gate needs a 2x2 unitary matrix");
      }
      return g.matrix;
    case GateKind::CNOT: return controlled_on_q0(pauli::X());
    case GateKind::CRX: {
      const cplx e = std::polar(1.0, -t);
      return controlled_on_q0(mat2((1.0 + e) / 2.0, (1.0 - e) / 2.0, (1.0 - e) / 2.0, (1.0 + e) / 2.0));
    }
    case GateKind::ECR: return ecr_matrix().matrix();
    case GateKind::CRPulse: return exp_i_involutory(t / 8, xz());
    case GateKind::USPE: return spe_matrix(t).matrix();
  }
  throw InvalidArgument("unhandled gate kind");
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1) throw InvalidArgument("circuit width must be >= 1");
}

Circuit& Circuit::add(Gate g) {
  if (static_cast<int>(g.qubits.size()) != arity(g.kind)) {
    std::ostringstream os;
    os << to_string(g.kind) << " acts on " << arity(g.kind) << " qubit(s), got "
       << g.qubits.size();
    throw InvalidArgument(os.str());
  }
  for (int q : g.qubits) {
    if (q < 0 || q >= width_) {
      std::ostringstream os;
      os << "qubit index " << q << " outside circuit width " << width_;
      throw InvalidArgument(os.str());
    }
  }
  if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
    throw InvalidArgument("two-qubit gate needs distinct qubits");
  }
  if (g.kind == GateKind::U1Q) gate_matrix(g);  // validates the payload
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width() > width_) throw InvalidArgument("appended circuit is wider");
  for (const Gate& g : other.gates()) add(g);
  return *this;
}

std::size_t Circuit::count(GateKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [k](const Gate& g) { return g.kind == k; }));
}

ComplexMatrix embed(const ComplexMatrix& g, const std::vector<int>& qubits, int width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  const int k = static_cast<int>(qubits.size());
  const Eigen::Index sub = Eigen::Index{1} << k;
  if (g.rows() != sub || g.cols() != sub) throw DimensionMismatch("embed: gate size does not match qubit count");
  Eigen::Index mask = 0;
  for (int q : qubits) mask |= Eigen::Index{1} << q;

  auto spread = [&](Eigen::Index s) {
    Eigen::Index bits = 0;
    for (int i = 0; i < k; ++i)
      if ((s >> i) & 1) bits |= Eigen::Index{1} << qubits[i];
    return bits;
  };
  std::vector<Eigen::Index> offsets(sub);
  for (Eigen::Index s = 0; s < sub; ++s) offsets[s] = spread(s);

  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Eigen::Index sc = 0;
    for (int i = 0; i < k; ++i) sc |= ((c >> qubits[i]) & 1) << i;
    const Eigen::Index rest = c & ~mask;
    for (Eigen::Index sr = 0; sr < sub; ++sr) out(rest | offsets[sr], c) = g(sr, sc);
  }
  return out;
}

ComplexMatrix compile_matrix(const Circuit& c) {
  ComplexMatrix u = identity(Eigen::Index{1} << c.width());
  for (const Gate& g : c.gates()) u = embed(gate_matrix(g), g.qubits, c.width()) * u;
  return u;
}

Unitary2Q spe_matrix(double theta) {
  const cplx e = std::polar(1.0, -theta);
  const cplx p = (1.0 + e) / 2.0;
  const cplx m = (1.0 - e) / 2.0;
  ComplexMatrix u(4, 4);
  u << 1, 0, 0, 0,
       0, p, 0, m,
       0, m, 0, p,
       0, 0, 1, 0;
  return Unitary2Q(u);
}

SpeVariant spe_variant_from_char(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': return SpeVariant::A;
    case 'b': return SpeVariant::B;
    case 'c': return SpeVariant::C;
    case 'd': return SpeVariant::D;
  }
  throw InvalidArgument(std::string("unknown SPE circuit variant '") + c + "'");
}

Circuit build_spe_circuit(SpeVariant v, double theta) {
  Circuit c(2);
  switch (v) {
    case SpeVariant::A:
      c.add(Gate::crx(0, 1, theta)).add(Gate::cnot(1, 0));
      break;
    case SpeVariant::B:
      c.add(Gate::crx(1, 0, theta)).add(Gate::cnot(0, 1));
      break;
    case SpeVariant::C:
      c.add(Gate::cnot(1, 0)).add(Gate::crx(0, 1, theta));
      break;
    case SpeVariant::D:
      c.add(Gate::cnot(0, 1)).add(Gate::crx(1, 0, theta));
      break;
  }
  return c;
}

std::array<ComplexVector, 4> simulate_basis_action(double theta) {
  const ComplexMatrix u = compile_matrix(build_spe_circuit(SpeVariant::A, theta));
  return {u.col(0), u.col(1), u.col(2), u.col(3)};
}

ComplexMatrix ecr_fraction(double theta) {
  const ComplexMatrix ix = kron(pauli::I(), pauli::X());
  return exp_i_involutory(theta / 8, xz()) * ix * exp_i_involutory(-theta / 8, xz());
}

Unitary2Q ecr_matrix() { return Unitary2Q(ecr_fraction(kPi)); }

bool cnot_identity_check(double tol) {
  const ComplexMatrix cnot = gate_matrix(Gate::cnot(0, 1));
  const ComplexMatrix lhs = std::polar(1.0, kPi / 4) * cnot;
  const ComplexMatrix rhs = kron(pauli::I(), pauli::X()) * ecr_matrix().matrix() *
                            kron(exp_i_involutory(kPi / 4, pauli::X()),
                                 exp_i_involutory(kPi / 4, pauli::Z()));
  return approx_equal(lhs, rhs, tol);
}

Circuit build_utqqc(int variant, const CartanCoordinates& c) {
  if (variant != 1 && variant != 2) throw InvalidArgument("UTQQC variant must be 1 or 2");
  if (!in_chamber(c, 1e-9) || c.c3 < -kPi / 2) {
    std::ostringstream os;
    os << "Cartan point (" << c.c1 << ", " << c.c2 << ", " << c.c3
       << ") is outside the Weyl chamber";
    throw InvalidArgument(os.str());
  }
  const SpeVariant first = variant == 1 ? SpeVariant::A : SpeVariant::B;
  const SpeVariant second = variant == 1 ? SpeVariant::C : SpeVariant::D;
  Circuit out(2);
  out.append(build_spe_circuit(first, c.c2));
  out.add(Gate::ry(1, c.c1)).add(Gate::ry(0, -c.c3));
  out.append(build_spe_circuit(second, c.c2));
  return out;
}

Circuit build_ghz(int n) {
  if (n < 2) throw InvalidArgument("GHZ builder needs n >= 2");
  Circuit c(n);
  c.add(Gate::x(0));
  c.add(Gate::uspe(0, 1, kPi / 2));
  // With its q0 input in |0>, USPE copies its q1 bit onto q0, so each block
  // extends the GHZ pair by one qubit; the X gates restore the 0/1 pattern.
  for (int k = 2; k < n; ++k) c.add(Gate::uspe(k, k - 1, kPi / 2));
  for (int q = 1; q <= n - 2; ++q) c.add(Gate::x(q));
  return c;
}

Circuit build_w(int n) {
  if (n < 2) throw InvalidArgument("W builder needs n >= 2");
  Circuit c(n);
  c.add(Gate::x(0));
  for (int k = 0; k + 1 < n; ++k) c.add(Gate::uspe(k, k + 1, kPi / 2));
  return c;
}

ComplexVector ghz_target(int n) {
  if (n < 2) throw InvalidArgument("GHZ target needs n >= 2");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector v = ComplexVector::Zero(dim);
  const cplx pre = std::polar(1.0 / std::sqrt(2.0), -kPi / 4);
  v((Eigen::Index{1} << (n - 1)) - 1) = pre;
  v(Eigen::Index{1} << (n - 1)) = pre * kI;
  return v;
}

ComplexVector w_target(int n) {
  if (n < 2) throw InvalidArgument("W target needs n >= 2");
  const Eigen::Index dim = Eigen::Index{1} << n;
  ComplexVector phi = ComplexVector::Zero(dim);
  phi(Eigen::Index{1} << (n - 1)) =
      std::polar(std::pow(2.0, -(n - 2) / 2.0), (n - 2) * kPi / 4);
  for (int k = 1; k <= n - 2; ++k) {
    phi(Eigen::Index{1} << (n - k - 1)) +=
        std::polar(std::pow(2.0, -(n - k - 1) / 2.0), (n - k - 3) * kPi / 4);
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(1) = 1.0;
  v += kI * phi;
  return std::polar(1.0 / std::sqrt(2.0), -kPi / 4) * v;
}

}  // namespace spe

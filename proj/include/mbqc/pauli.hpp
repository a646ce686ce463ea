#pragma once
// Sparse Pauli-term algebra over qubit registers: exact group products,
// Clifford conjugation (H / CZ / CX), stabilizer generators G = a·I + b·K
// with K = X_i ⊗ Z over a neighborhood, and measurement generators
// ⟨γ| = ⟨0|[α* + β*·X].
//
// Per-site basis and index convention used across the whole library:
//   I = 0, X = 1, Z = 2, ZX = 3   (ZX is the ordered product Z·X = −iY)
// i.e. bit 0 holds the X component and bit 1 the Z component, so the
// enum value doubles as the flat Pauli-basis index of the tensor stack.
// Coefficients are full complex doubles; comparisons use explicit
// tolerances documented at the call sites (default 1e-12).

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbqc {

using Complex = std::complex<double>;

/// Library-wide error type; thrown on contract violations and bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PauliOp : std::uint8_t { I = 0, X = 1, Z = 2, ZX = 3 };

inline const char* pauli_label(PauliOp op) {
  switch (op) {
    case PauliOp::I: return "I";
    case PauliOp::X: return "X";
    case PauliOp::Z: return "Z";
    case PauliOp::ZX: return "ZX";
  }
  throw Error("invalid PauliOp tag");
}

inline PauliOp pauli_from_label(const std::string& s) {
  if (s == "I") return PauliOp::I;
  if (s == "X") return PauliOp::X;
  if (s == "Z") return PauliOp::Z;
  if (s == "ZX") return PauliOp::ZX;
  throw Error("unknown Pauli letter '" + s + "' (expected I, X, Z or ZX)");
}

namespace detail {
inline std::string format_double(double v) {
  // Shortest representation that round-trips; keeps exports byte-stable.
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace detail

/// Complex-weighted tensor product of per-qubit operators from
/// {I, X, Z, ZX}; qubits not present in `ops` carry I.
struct PauliTerm {
  Complex coeff{1.0, 0.0};
  std::map<int, std::uint8_t> ops;  // qubit id -> (z<<1 | x) bits, never 0

  PauliTerm() = default;
  explicit PauliTerm(Complex c) : coeff(c) {}

  static PauliTerm identity() { return PauliTerm{}; }

  void set(int qubit, PauliOp op) {
    const auto bits = static_cast<std::uint8_t>(op);
    if (bits == 0) {
      ops.erase(qubit);
    } else {
      ops[qubit] = bits;
    }
  }

  PauliOp at(int qubit) const {
    auto it = ops.find(qubit);
    return it == ops.end() ? PauliOp::I : static_cast<PauliOp>(it->second);
  }

  bool is_identity_string() const { return ops.empty(); }

  /// The qubits this term acts on non-trivially.
  std::set<int> support() const {
    std::set<int> s;
    for (const auto& [q, bits] : ops) {
      (void)bits;
      s.insert(q);
    }
    return s;
  }

  /// Operator part only, e.g. "X1 Z2" ("I" for the identity string).
  std::string ops_text() const {
    if (ops.empty()) return "I";
    std::string out;
    for (const auto& [q, bits] : ops) {
      if (!out.empty()) out += ' ';
      out += pauli_label(static_cast<PauliOp>(bits));
      out += std::to_string(q);
    }
    return out;
  }

  /// Full text form: "[re,im] X1 Z2".
  std::string to_text() const {
    return "[" + detail::format_double(coeff.real()) + "," +
           detail::format_double(coeff.imag()) + "] " + ops_text();
  }

  /// Parses "X1 Z2", optionally prefixed with "[re,im]" (default coeff 1).
  static PauliTerm from_text(const std::string& text) {
    PauliTerm term;
    std::string rest = text;
    auto first = rest.find_first_not_of(" \t");
    if (first == std::string::npos) throw Error("empty Pauli-term text");
    rest = rest.substr(first);
    if (rest.front() == '[') {
      auto close = rest.find(']');
      auto comma = rest.find(',');
      if (close == std::string::npos || comma == std::string::npos || comma > close)
        throw Error("malformed coefficient in Pauli-term text: " + text);
      try {
        term.coeff = Complex(std::stod(rest.substr(1, comma - 1)),
                             std::stod(rest.substr(comma + 1, close - comma - 1)));
      } catch (const std::exception&) {
        throw Error("malformed coefficient in Pauli-term text: " + text);
      }
      rest = rest.substr(close + 1);
    }
    std::istringstream is(rest);
    std::string tok;
    while (is >> tok) {
      auto digit = tok.find_first_of("0123456789");
      if (digit == std::string::npos) {
        if (tok == "I") continue;  // bare identity token, as ops_text() prints it
        throw Error("Pauli token '" + tok + "' lacks a qubit id");
      }
      const PauliOp op = pauli_from_label(tok.substr(0, digit));
      int qubit = 0;
      try {
        qubit = std::stoi(tok.substr(digit));
      } catch (const std::exception&) {
        throw Error("Pauli token '" + tok + "' has a malformed qubit id");
      }
      if (op != PauliOp::I && term.ops.count(qubit))
        throw Error("duplicate qubit " + std::to_string(qubit) + " in Pauli-term text");
      term.set(qubit, op);
    }
    return term;
  }
};

/// Group product lhs·rhs with the phase folded into the coefficient.
/// Per site: Z^{z1}X^{x1} · Z^{z2}X^{x2} = (−1)^{x1·z2} Z^{z1⊕z2} X^{x1⊕x2}.
inline PauliTerm multiply(const PauliTerm& lhs, const PauliTerm& rhs) {
  PauliTerm out;
  out.coeff = lhs.coeff * rhs.coeff;
  out.ops = lhs.ops;
  for (const auto& [q, rbits] : rhs.ops) {
    auto it = out.ops.find(q);
    const std::uint8_t lbits = it == out.ops.end() ? 0 : it->second;
    if ((lbits & 1) && (rbits & 2)) out.coeff = -out.coeff;
    const std::uint8_t nbits = lbits ^ rbits;
    if (nbits == 0) {
      if (it != out.ops.end()) out.ops.erase(it);
    } else if (it != out.ops.end()) {
      it->second = nbits;
    } else {
      out.ops.emplace(q, nbits);
    }
  }
  return out;
}

/// True iff k1·k2 = k2·k1: the number of per-site anticommuting pairs is even.
inline bool commutes(const PauliTerm& k1, const PauliTerm& k2) {
  int anti = 0;
  for (const auto& [q, b1] : k1.ops) {
    auto it = k2.ops.find(q);
    if (it == k2.ops.end()) continue;
    const std::uint8_t b2 = it->second;
    const int x1 = b1 & 1, z1 = (b1 >> 1) & 1;
    const int x2 = b2 & 1, z2 = (b2 >> 1) & 1;
    anti ^= (x1 & z2) ^ (z1 & x2);
  }
  return anti == 0;
}

/// Clifford elements used by the compiler: H(q), CZ(i,j), CX(control, target).
struct CliffordGate {
  enum class Kind { H, CZ, CX };
  Kind kind;
  int q1 = 0;   // H qubit / CZ first / CX control
  int q2 = -1;  // CZ second / CX target (unused for H)

  static CliffordGate h(int q) { return {Kind::H, q, -1}; }
  static CliffordGate cz(int i, int j) {
    if (i == j) throw Error("CZ needs two distinct qubits");
    return {Kind::CZ, i, j};
  }
  static CliffordGate cx(int control, int target) {
    if (control == target) throw Error("CX needs two distinct qubits");
    return {Kind::CX, control, target};
  }

  bool operator==(const CliffordGate& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::CZ)  // symmetric
      return (q1 == o.q1 && q2 == o.q2) || (q1 == o.q2 && q2 == o.q1);
    return q1 == o.q1 && (kind == Kind::H || q2 == o.q2);
  }
};

/// Returns U·term·U† for U ∈ {H, CZ, CX} as a single PauliTerm.
/// Bit rules (per-site op = Z^z X^x):
///   H(q):     (z,x) → (x,z), phase (−1)^{z·x}
///   CZ(i,j):  z_i ⊕= x_j, z_j ⊕= x_i, phase (−1)^{x_i·x_j}
///   CX(c,t):  z_c ⊕= z_t, x_t ⊕= x_c, no phase
inline PauliTerm conjugate(const CliffordGate& gate, const PauliTerm& term) {
  PauliTerm out = term;
  auto bits_of = [&out](int q) -> std::uint8_t {
    auto it = out.ops.find(q);
    return it == out.ops.end() ? std::uint8_t{0} : it->second;
  };
  auto store = [&out](int q, std::uint8_t b) {
    if (b == 0) {
      out.ops.erase(q);
    } else {
      out.ops[q] = b;
    }
  };
  switch (gate.kind) {
    case CliffordGate::Kind::H: {
      const std::uint8_t b = bits_of(gate.q1);
      const std::uint8_t x = b & 1, z = (b >> 1) & 1;
      if (x && z) out.coeff = -out.coeff;
      store(gate.q1, static_cast<std::uint8_t>((x << 1) | z));
      break;
    }
    case CliffordGate::Kind::CZ: {
      const std::uint8_t bi = bits_of(gate.q1), bj = bits_of(gate.q2);
      const std::uint8_t xi = bi & 1, xj = bj & 1;
      if (xi && xj) out.coeff = -out.coeff;
      store(gate.q1, static_cast<std::uint8_t>(bi ^ (xj << 1)));
      store(gate.q2, static_cast<std::uint8_t>(bj ^ (xi << 1)));
      break;
    }
    case CliffordGate::Kind::CX: {
      const std::uint8_t bc = bits_of(gate.q1), bt = bits_of(gate.q2);
      store(gate.q1, static_cast<std::uint8_t>(bc ^ (bt & 2)));
      store(gate.q2, static_cast<std::uint8_t>(bt ^ (bc & 1)));
      break;
    }
  }
  return out;
}

/// One qubit's state as an operator: G = a·I + b·K with
/// K = X_qubit ⊗_{j∈neighborhood} Z_j.  For a normalized qubit
/// |a|² + |b|² = 1 and ⟨0…0|G†G|0…0⟩ = 1 (G†G = 1 + (a*b + b*a)·K).
struct Generator {
  int qubit = 0;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  std::set<int> neighborhood;

  PauliTerm stabilizer() const {
    PauliTerm k;
    k.set(qubit, PauliOp::X);
    for (int j : neighborhood) {
      if (j == qubit) throw Error("generator neighborhood contains its own qubit");
      k.set(j, PauliOp::Z);
    }
    return k;
  }
};

/// CZ between g.qubit and `other` toggles `other` in the neighborhood
/// (CZ is an involution: entangling twice removes the edge).
inline Generator entangle(Generator g, int other) {
  if (other == g.qubit) throw Error("cannot entangle a qubit with itself");
  auto it = g.neighborhood.find(other);
  if (it == g.neighborhood.end()) {
    g.neighborhood.insert(other);
  } else {
    g.neighborhood.erase(it);
  }
  return g;
}

/// Measurement generator: ⟨γ| = ⟨0_qubit|[α* + β*·X_qubit].
/// Stored as the ket-side pair (α, β) with |α|² + |β|² = 1.
struct MeasGenerator {
  int qubit = 0;
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

}  // namespace mbqc

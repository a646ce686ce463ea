#pragma once
// Rotation-circuit input model: an ordered product of Pauli-generated
// rotations Û_l = cos(θ_l) + i·sin(θ_l)·σ_l, optionally preceded by a list
// of Clifford gates (H / CZ / CX).  Circuit semantics: the Clifford list
// applies first, then the rotations in order.
//
// Clifford absorption rewrites  (∏R)·C  as  C·(∏R′)  with every rotation
// axis conjugated through the Clifford list, so a compiler can emit the
// Cliffords as final corrections on the outputs.

#include <cmath>
#include <string>
#include <vector>

#include "mbqc/pauli.hpp"

namespace mbqc {

/// One rotation factor cos(θ) + i·sin(θ)·σ.  The axis carries coefficient
/// +1 and, at the user level, must be a nonempty pure X-string or pure
/// Z-string; internally (after Clifford absorption) mixed X/Z strings are
/// allowed, but Y-type letters (ZX) are not compilable and are rejected.
struct RotationGate {
  PauliTerm axis;
  double theta = 0.0;
};

struct Circuit {
  int n = 1;
  std::vector<RotationGate> gates;
  std::vector<CliffordGate> cliffords;  // applied before the rotations
};

/// True iff every per-qubit letter of the axis is X or every letter is Z.
inline bool is_pure_string(const PauliTerm& axis) {
  bool has_x = false, has_z = false;
  for (const auto& [q, bits] : axis.ops) {
    (void)q;
    if (bits == 1) has_x = true;
    else if (bits == 2) has_z = true;
    else return false;  // ZX letter
  }
  return !(has_x && has_z);
}

inline void validate_gate_axis(const PauliTerm& axis, int n) {
  if (axis.ops.empty()) throw Error("rotation axis must act on at least one qubit");
  if (std::abs(axis.coeff - Complex(1.0, 0.0)) > 1e-12)
    throw Error("rotation axis coefficient must be 1");
  for (const auto& [q, bits] : axis.ops) {
    if (q < 1 || q > n)
      throw Error("rotation axis acts on qubit " + std::to_string(q) +
                  " outside 1.." + std::to_string(n));
    if (bits == 3)
      throw Error("rotation axis has a ZX letter on qubit " + std::to_string(q) +
                  "; only X- or Z-strings are supported");
  }
  if (!is_pure_string(axis))
    throw Error("rotation axis '" + axis.ops_text() +
                "' mixes X and Z letters; decompose it into pure strings");
}

inline void validate_circuit(const Circuit& c) {
  if (c.n < 1) throw Error("circuit needs at least one qubit");
  for (const auto& g : c.gates) {
    validate_gate_axis(g.axis, c.n);
    if (!std::isfinite(g.theta)) throw Error("rotation angle must be finite");
  }
  auto check_q = [&c](int q) {
    if (q < 1 || q > c.n)
      throw Error("Clifford gate acts on qubit " + std::to_string(q) +
                  " outside 1.." + std::to_string(c.n));
  };
  for (const auto& g : c.cliffords) {
    check_q(g.q1);
    if (g.kind != CliffordGate::Kind::H) check_q(g.q2);
  }
}

/// Result of rewriting (∏R)·C as C·(∏R′): `rotations` holds the conjugated
/// gates (axes with coefficient +1, sign folded into θ) and `trailing` the
/// original Clifford list, now to be applied after the rotations — e.g. as
/// final corrections on a compiled pattern's outputs.
struct AbsorbedCircuit {
  Circuit rotations;                    // cliffords empty
  std::vector<CliffordGate> trailing;   // == original clifford list
};

/// Conjugates every rotation axis through the Clifford list:
/// σ′ = C†σC with C = c_k∘…∘c_1, computed by folding conjugate() over the
/// list in reverse (H/CZ/CX are self-inverse).  Conjugation keeps the
/// coefficient in {+1, −1}; −1 is folded into the angle.  Axes that pick up
/// ZX letters (Y-type rotations) have no X/Z-frame compilation and are
/// rejected with a structured error.
inline AbsorbedCircuit absorb_cliffords(const Circuit& c) {
  validate_circuit(c);
  AbsorbedCircuit out;
  out.rotations.n = c.n;
  out.trailing = c.cliffords;
  for (const auto& g : c.gates) {
    PauliTerm axis = g.axis;
    for (auto it = c.cliffords.rbegin(); it != c.cliffords.rend(); ++it)
      axis = conjugate(*it, axis);
    double theta = g.theta;
    if (axis.coeff.real() < 0.0) theta = -theta;
    axis.coeff = Complex(1.0, 0.0);
    for (const auto& [q, bits] : axis.ops)
      if (bits == 3)
        throw Error("Clifford absorption produced a ZX letter on qubit " +
                    std::to_string(q) + " (axis '" + axis.ops_text() +
                    "'); such rotations are not compilable in X/Z frames");
    out.rotations.gates.push_back({std::move(axis), theta});
  }
  return out;
}

}  // namespace mbqc

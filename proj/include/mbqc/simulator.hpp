#pragma once
// Dense statevector oracle: prepares graph states from patterns, executes
// measurement programs (post-selected all-s=0 or exhaustive byproduct
// branch enumeration with stabilizer-derived corrections), applies rotation
// circuits directly, and compares states up to a global phase.
//
// Amplitude storage: qubit 1 is the most significant bit of the amplitude
// index.  Dense guard: at most 12 qubits.  During a pattern run the live
// qubits are the sorted vertex ids; position p (1-based, id-sorted) maps to
// bit (live_count − p).

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"

namespace mbqc {

struct StateVector {
  int n = 0;
  std::vector<Complex> amps;

  StateVector() = default;
  StateVector(int qubits, std::vector<Complex> a) : n(qubits), amps(std::move(a)) {
    if (n < 0 || n > 12) throw Error("statevector limited to 12 qubits");
    if (amps.size() != (std::size_t{1} << n))
      throw Error("amplitude count does not match qubit count");
  }

  double norm2() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
  }

  void normalize() {
    const double nrm = std::sqrt(norm2());
    if (nrm < 1e-300) throw Error("cannot normalize a zero state vector");
    for (auto& a : amps) a /= nrm;
  }
};

namespace detail {

inline std::size_t bit_mask(int n, int position) {
  if (position < 1 || position > n) throw Error("qubit position out of range");
  return std::size_t{1} << (n - position);
}

}  // namespace detail

/// Applies Z^z X^x strings: out[c] = coeff·(−1)^{parity(zmask & c)}·in[c ⊕ xmask].
inline void apply_pauli_masks(StateVector& s, std::size_t xmask, std::size_t zmask,
                              Complex coeff) {
  std::vector<Complex> out(s.amps.size());
  for (std::size_t c = 0; c < s.amps.size(); ++c) {
    const bool neg = std::popcount(zmask & c) & 1;
    out[c] = coeff * (neg ? -1.0 : 1.0) * s.amps[c ^ xmask];
  }
  s.amps = std::move(out);
}

/// Applies a PauliTerm whose qubit ids are mapped to positions by `position_of`.
template <typename PositionOf>
inline void apply_pauli_term(StateVector& s, const PauliTerm& term,
                             PositionOf&& position_of) {
  std::size_t xmask = 0, zmask = 0;
  for (const auto& [q, bits] : term.ops) {
    const std::size_t m = detail::bit_mask(s.n, position_of(q));
    if (bits & 1) xmask |= m;
    if (bits & 2) zmask |= m;
  }
  apply_pauli_masks(s, xmask, zmask, term.coeff);
}

inline void apply_h(StateVector& s, int position) {
  const std::size_t m = detail::bit_mask(s.n, position);
  const double isq2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    if (i & m) continue;
    const Complex a0 = s.amps[i], a1 = s.amps[i | m];
    s.amps[i] = isq2 * (a0 + a1);
    s.amps[i | m] = isq2 * (a0 - a1);
  }
}

inline void apply_cz(StateVector& s, int p1, int p2) {
  const std::size_t m1 = detail::bit_mask(s.n, p1), m2 = detail::bit_mask(s.n, p2);
  if (m1 == m2) throw Error("CZ needs two distinct qubits");
  for (std::size_t i = 0; i < s.amps.size(); ++i)
    if ((i & m1) && (i & m2)) s.amps[i] = -s.amps[i];
}

inline void apply_cx(StateVector& s, int control, int target) {
  const std::size_t mc = detail::bit_mask(s.n, control),
                    mt = detail::bit_mask(s.n, target);
  if (mc == mt) throw Error("CX needs two distinct qubits");
  for (std::size_t i = 0; i < s.amps.size(); ++i)
    if ((i & mc) && !(i & mt)) std::swap(s.amps[i], s.amps[i | mt]);
}

template <typename PositionOf>
inline void apply_clifford(StateVector& s, const CliffordGate& g,
                           PositionOf&& position_of) {
  switch (g.kind) {
    case CliffordGate::Kind::H: apply_h(s, position_of(g.q1)); break;
    case CliffordGate::Kind::CZ: apply_cz(s, position_of(g.q1), position_of(g.q2)); break;
    case CliffordGate::Kind::CX: apply_cx(s, position_of(g.q1), position_of(g.q2)); break;
  }
}

/// ψ ← cos(t)·ψ + i·sin(t)·σψ.  The axis coefficient must be ±1; a −1 is
/// folded into the angle (cos even, sin odd).
template <typename PositionOf>
inline void apply_rotation(StateVector& s, const PauliTerm& axis, double t,
                           PositionOf&& position_of) {
  if (std::abs(axis.coeff.imag()) > 1e-12 ||
      std::abs(std::abs(axis.coeff.real()) - 1.0) > 1e-12)
    throw Error("rotation axis coefficient must be +1 or -1");
  if (axis.coeff.real() < 0.0) t = -t;
  StateVector flipped = s;
  PauliTerm unit = axis;
  unit.coeff = Complex(1.0, 0.0);
  apply_pauli_term(flipped, unit, position_of);
  const Complex c(std::cos(t), 0.0), is(0.0, std::sin(t));
  for (std::size_t i = 0; i < s.amps.size(); ++i)
    s.amps[i] = c * s.amps[i] + is * flipped.amps[i];
}

/// Contracts ⟨0|[α* + β*·X] (a measurement bra) onto `position`, removing
/// that qubit: new[k] = α*·old[k:0] + β*·old[k:1] (no renormalization).
inline StateVector project_bra(const StateVector& s, int position, Complex alpha,
                               Complex beta) {
  if (s.n < 1) throw Error("cannot project an empty state");
  const std::size_t m = detail::bit_mask(s.n, position);
  StateVector out;
  out.n = s.n - 1;
  out.amps.resize(s.amps.size() / 2);
  const Complex as = std::conj(alpha), bs = std::conj(beta);
  const std::size_t low = m - 1;            // bits below the removed one
  const std::size_t high = ~low;            // bits at/above it (shift down)
  for (std::size_t k = 0; k < out.amps.size(); ++k) {
    const std::size_t i0 = ((k & high) << 1) | (k & low);
    out.amps[k] = as * s.amps[i0] + bs * s.amps[i0 | m];
  }
  return out;
}

/// ⊗(a_k|0⟩ + b_k|1⟩) over the given qubits (qubit 1 first / most
/// significant).
inline StateVector product_state(const std::vector<std::pair<Complex, Complex>>& qubits) {
  const int n = int(qubits.size());
  if (n < 1 || n > 12) throw Error("product state supports 1..12 qubits");
  StateVector s;
  s.n = n;
  s.amps.assign(std::size_t{1} << n, Complex(0.0));
  for (std::size_t idx = 0; idx < s.amps.size(); ++idx) {
    Complex amp(1.0, 0.0);
    for (int p = 1; p <= n; ++p) {
      const bool one = idx & detail::bit_mask(n, p);
      amp *= one ? qubits[std::size_t(p - 1)].second : qubits[std::size_t(p - 1)].first;
      if (amp == Complex(0.0)) break;
    }
    s.amps[idx] = amp;
  }
  return s;
}

/// state = ∏CZ_edges · ⊗(a_i|0⟩ + b_i|1⟩) over vertices in ascending id
/// order.  `input_override` replaces the (a,b) of Input vertices, given in
/// ascending input-id order.
inline StateVector prepare(
    const GraphStatePattern& pattern,
    const std::optional<std::vector<std::pair<Complex, Complex>>>& input_override =
        std::nullopt) {
  pattern.validate();
  const int n = int(pattern.vertices.size());
  if (n < 1 || n > 12) throw Error("pattern vertex count must be between 1 and 12");

  std::vector<int> ids;
  ids.reserve(pattern.vertices.size());
  std::vector<std::pair<Complex, Complex>> coeffs;
  std::size_t input_seen = 0;
  for (const auto& [id, v] : pattern.vertices) {
    ids.push_back(id);
    Complex a = v.a, b = v.b;
    if (v.role == VertexRole::Input && input_override) {
      if (input_seen >= input_override->size())
        throw Error("input override provides too few coefficient pairs");
      a = (*input_override)[input_seen].first;
      b = (*input_override)[input_seen].second;
      if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-9)
        throw Error("input override coefficients are not normalized");
      ++input_seen;
    }
    coeffs.emplace_back(a, b);
  }
  if (input_override && input_seen != input_override->size())
    throw Error("input override provides too many coefficient pairs");

  StateVector s;
  s.n = n;
  s.amps.assign(std::size_t{1} << n, Complex(0.0));
  for (std::size_t idx = 0; idx < s.amps.size(); ++idx) {
    Complex amp(1.0, 0.0);
    for (int p = 1; p <= n; ++p) {
      const bool one = idx & detail::bit_mask(n, p);
      amp *= one ? coeffs[std::size_t(p - 1)].second : coeffs[std::size_t(p - 1)].first;
      if (amp == Complex(0.0)) break;
    }
    s.amps[idx] = amp;
  }
  auto position_of = [&ids](int id) {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw Error("unknown vertex id in prepare");
    return int(it - ids.begin()) + 1;
  };
  for (const auto& [i, j] : pattern.edges) apply_cz(s, position_of(i), position_of(j));
  return s;
}

enum class RunMode { Postselect0, Byproduct };

/// One enumerated measurement branch: outcomes per measured vertex (in
/// measurement order), branch probability, and the overlap of the branch's
/// corrected, normalized output with the reference (all-s=0) output.
struct OutcomeBranch {
  std::vector<std::pair<int, int>> outcomes;  // (vertex id, s)
  double probability = 0.0;
  Complex overlap_ref{0.0, 0.0};
};

struct OutcomeRecord {
  std::vector<OutcomeBranch> branches;
  double total_probability = 0.0;
};

struct RunResult {
  StateVector output;  // normalized state on output vertices, ascending ids
  OutcomeRecord record;
};

namespace detail {

struct LiveRegister {
  std::vector<int> ids;  // sorted live vertex ids

  int position_of(int id) const {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
      throw Error("vertex " + std::to_string(id) + " is not live");
    return int(it - ids.begin()) + 1;
  }
  void remove(int id) { ids.erase(ids.begin() + (position_of(id) - 1)); }
};

/// Derives the outcome-1 correction for vertex `v`, or throws.
///
/// An XY outcome flip equals a Z insertion at v before the bra; via the
/// graph-state stabilizer of an unmeasured |+⟩ neighbor l this becomes the
/// operator X_l · Z_{N(l)\{v}} — exact (no phase) provided every vertex it
/// touches is still unmeasured.  A YZ outcome flip equals an X insertion at
/// v, which (for v prepared |+⟩) pushes through the entangling layer as
/// Z_{N(v)} — again requiring all of N(v) unmeasured.  The support is never
/// truncated: touching an already-measured vertex means the pattern has no
/// causal Pauli correction for this outcome.
inline PauliTerm derive_correction(const GraphStatePattern& pattern, int v,
                                   const std::set<int>& measured_so_far,
                                   const std::map<int, std::set<int>>& nbh) {
  const auto& vert = pattern.vertex(v);
  const Plane plane = vert.measure->plane;
  if (plane == Plane::YZ) {
    if (std::abs(vert.a - vert.b) > 1e-9)
      throw Error("nondeterministic pattern: YZ byproduct at vertex " +
                  std::to_string(v) + " requires a = b");
    PauliTerm corr;
    for (int k : nbh.at(v)) {
      if (measured_so_far.count(k))
        throw Error("nondeterministic pattern: YZ correction at vertex " +
                    std::to_string(v) + " needs neighbor " + std::to_string(k) +
                    " which is already measured");
      corr.set(k, PauliOp::Z);
    }
    return corr;
  }
  if (plane == Plane::XY) {
    for (int l : nbh.at(v)) {
      if (measured_so_far.count(l)) continue;
      const auto& cand = pattern.vertex(l);
      if (std::abs(cand.a - cand.b) > 1e-9) continue;
      bool causal = true;
      for (int k : nbh.at(l))
        if (k != v && measured_so_far.count(k)) causal = false;
      if (!causal) continue;
      PauliTerm corr;
      corr.set(l, PauliOp::X);
      for (int k : nbh.at(l))
        if (k != v) corr.set(k, PauliOp::Z);
      return corr;
    }
    throw Error("nondeterministic pattern: no equal-weight unmeasured neighbor "
                "with unmeasured surroundings available to correct vertex " +
                std::to_string(v));
  }
  throw Error("nondeterministic pattern: no byproduct rule for the XZ plane at vertex " +
              std::to_string(v));
}

}  // namespace detail

/// Executes the measurement program of `pattern` on `state` (which must come
/// from prepare(pattern), same input override).  Postselect0 projects every
/// measured vertex onto its s=0 bra; Byproduct enumerates all outcome
/// vectors, applying declarative byproduct corrections where provided and
/// the derived plane rules otherwise.  Output states carry the pattern's
/// final Clifford corrections and are renormalized at the end.
inline RunResult run_pattern(const StateVector& state, const GraphStatePattern& pattern,
                             RunMode mode) {
  pattern.validate();
  if (state.n != int(pattern.vertices.size()))
    throw Error("state size does not match pattern (expected prepare(pattern) output)");
  const auto order = pattern.measured_order();
  const auto nbh = pattern.neighborhoods();
  const auto outs = pattern.outputs();
  if (outs.empty()) throw Error("pattern has no output vertices");

  std::map<int, std::vector<const Byproduct*>> declared;
  for (const auto& bp : pattern.byproducts) declared[bp.trigger].push_back(&bp);

  auto run_branch = [&](std::uint32_t outcome_mask) {
    StateVector s = state;
    detail::LiveRegister live;
    for (const auto& [id, v] : pattern.vertices) {
      (void)v;
      live.ids.push_back(id);
    }
    std::set<int> measured_so_far;
    OutcomeBranch branch;
    for (std::size_t step = 0; step < order.size(); ++step) {
      const int v = order[step];
      const int s_v = int((outcome_mask >> step) & 1u);
      const auto& vert = pattern.vertex(v);
      const MeasGenerator m =
          plane_generator(vert.measure->plane, vert.measure->angle, s_v, v);
      s = project_bra(s, live.position_of(v), m.alpha, m.beta);
      live.remove(v);
      measured_so_far.insert(v);
      branch.outcomes.emplace_back(v, s_v);
      if (s_v == 1) {
        std::vector<PauliTerm> corrections;
        if (auto it = declared.find(v); it != declared.end()) {
          for (const auto* bp : it->second) corrections.push_back(bp->correction);
        } else {
          corrections.push_back(detail::derive_correction(pattern, v, measured_so_far, nbh));
        }
        for (const auto& corr : corrections) {
          for (const auto& [q, bits] : corr.ops) {
            (void)bits;
            if (measured_so_far.count(q))
              throw Error("byproduct correction for vertex " + std::to_string(v) +
                          " touches already-measured vertex " + std::to_string(q));
          }
          apply_pauli_term(s, corr, [&live](int id) { return live.position_of(id); });
        }
      }
    }
    for (const auto& g : pattern.final_cliffords)
      apply_clifford(s, g, [&live](int id) { return live.position_of(id); });
    branch.probability = s.norm2();
    return std::pair<StateVector, OutcomeBranch>{std::move(s), std::move(branch)};
  };

  RunResult result;
  auto [ref_state, ref_branch] = run_branch(0);
  if (ref_branch.probability < 1e-300)
    throw Error("post-selected branch has zero probability");
  StateVector ref_norm = ref_state;
  ref_norm.normalize();
  result.output = ref_norm;

  if (mode == RunMode::Postselect0) {
    ref_branch.overlap_ref = Complex(1.0, 0.0);
    result.record.branches.push_back(std::move(ref_branch));
    result.record.total_probability = result.record.branches[0].probability;
    return result;
  }

  if (order.size() > 20) throw Error("byproduct enumeration limited to 20 measurements");
  const std::uint32_t count = std::uint32_t{1} << order.size();
  result.record.branches.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    auto [s, branch] = mask == 0 ? std::pair{ref_state, ref_branch} : run_branch(mask);
    if (branch.probability > 1e-300) {
      StateVector sn = s;
      sn.normalize();
      Complex overlap(0.0, 0.0);
      for (std::size_t i = 0; i < sn.amps.size(); ++i)
        overlap += std::conj(ref_norm.amps[i]) * sn.amps[i];
      branch.overlap_ref = overlap;
    }
    result.record.total_probability += branch.probability;
    result.record.branches.push_back(std::move(branch));
  }
  return result;
}

/// Left-multiplies the circuit's Clifford list (first) and rotation factors
/// cos(θ) + i·sin(θ)·σ in order onto a logical state (qubit ids 1..n map to
/// positions 1..n).
inline StateVector apply_circuit(StateVector state, const Circuit& circuit) {
  validate_circuit(circuit);
  if (state.n != circuit.n) throw Error("state size does not match circuit");
  auto ident = [](int q) { return q; };
  for (const auto& g : circuit.cliffords) apply_clifford(state, g, ident);
  for (const auto& g : circuit.gates) apply_rotation(state, g.axis, g.theta, ident);
  return state;
}

/// |⟨s1|s2⟩| after normalizing both; 1 means equal up to a global phase.
inline double fidelity_up_to_phase(const StateVector& s1, const StateVector& s2) {
  if (s1.n != s2.n) throw Error("fidelity requires equal qubit counts");
  const double n1 = std::sqrt(s1.norm2()), n2 = std::sqrt(s2.norm2());
  if (n1 < 1e-300 || n2 < 1e-300) throw Error("fidelity of a zero vector");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < s1.amps.size(); ++i)
    acc += std::conj(s1.amps[i]) * s2.amps[i];
  return std::abs(acc) / (n1 * n2);
}

}  // namespace mbqc

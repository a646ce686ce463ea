#pragma once
// Circuit → pattern compiler and companions.
//
// compile() walks the circuit gate by gate, keeping one wire of vertices
// per logical qubit plus a frame bit f ∈ {0,1} counting teleportation
// steps (each wire measurement is a Hadamard-conjugated hop, so at frame f
// the wire's Z acts as the logical H^f·Z·H^f — Z at frame 0, X at frame 1):
//   * Z-letter support sits at frame 0, X-letter support at frame 1;
//     wires advance (frontier measured XY(accumulated angle), fresh |+⟩
//     vertex appended) until every support qubit is in the right frame.
//   * A rotation cos(θ) + i·sin(θ)·σ lands as one |+⟩ leaf ancilla
//     measured YZ(−2θ) and edged to the support frontiers — except a
//     single-qubit X rotation, which merges into the frontier's XY angle
//     (angle += 2θ) and costs no vertex.
//   * Wires finish at frame 0 with length ≥ 3 (input / middles / output),
//     so a pure Z-string circuit compiles to exactly 3n + #rotations
//     vertices.
// Byproduct corrections are emitted declaratively: a YZ leaf triggers Z on
// its carriers; a wire vertex triggers its successor's severed stabilizer.
// Clifford circuit elements are absorbed by conjugating downstream rotation
// axes and re-emitted as final Clifford corrections on the outputs.
//
// Also here: the Clifford-gauge alternate path for a single-qubit X
// rotation (star graph, planes YZ(θ) / XY(0), final H), the residual
// analyzer that reads a graph fragment off a symmetrized transfer tensor,
// and the closed-form resource accountant.

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/residual.hpp"
#include "mbqc/tensor.hpp"

namespace mbqc {

namespace detail {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct ProtoVertex {
  int pid = 0;  // provisional id (creation order)
  VertexRole role = VertexRole::Source;
  Complex a{kInvSqrt2, 0.0};
  Complex b{kInvSqrt2, 0.0};
  std::optional<MeasurementSpec> measure;  // order filled in at assembly
  int layer = 0;                           // wire: chain index; leaf: min carrier index
  bool is_leaf = false;
};

struct Wire {
  std::vector<int> chain;  // proto ids, input first
  int frame = 0;
  double pending_angle = 0.0;
};

}  // namespace detail

/// Compiles a rotation circuit into a measurement pattern.  Input
/// coefficients (one normalized (a,b) pair per logical qubit, ascending)
/// are baked into the Input vertices; the graph topology and angles do not
/// depend on them.  Vertex ids: inputs 1..n (by qubit), measured interior
/// vertices next (in creation order), outputs last (by qubit).
inline GraphStatePattern compile(const Circuit& circuit,
                                 const std::vector<std::pair<Complex, Complex>>& inputs) {
  validate_circuit(circuit);
  const int n = circuit.n;
  if (int(inputs.size()) != n)
    throw Error("expected " + std::to_string(n) + " input coefficient pairs");
  for (const auto& [a, b] : inputs)
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-9)
      throw Error("input coefficients are not normalized");

  const AbsorbedCircuit absorbed = absorb_cliffords(circuit);

  std::vector<detail::ProtoVertex> protos;
  std::set<std::pair<int, int>> proto_edges;
  std::map<int, int> successor;  // wire proto -> next proto on the same wire
  std::vector<detail::Wire> wires(static_cast<std::size_t>(n));

  auto new_proto = [&protos]() -> detail::ProtoVertex& {
    protos.push_back({});
    protos.back().pid = int(protos.size());
    return protos.back();
  };
  auto proto_at = [&protos](int pid) -> detail::ProtoVertex& {
    return protos[std::size_t(pid - 1)];
  };
  auto add_proto_edge = [&proto_edges](int i, int j) {
    proto_edges.insert({std::min(i, j), std::max(i, j)});
  };

  for (int q = 0; q < n; ++q) {
    auto& v = new_proto();
    v.role = VertexRole::Input;
    v.a = inputs[std::size_t(q)].first;
    v.b = inputs[std::size_t(q)].second;
    v.layer = 0;
    wires[std::size_t(q)].chain.push_back(v.pid);
  }

  auto advance = [&](int q) {
    auto& w = wires[std::size_t(q)];
    const int frontier = w.chain.back();
    proto_at(frontier).measure = MeasurementSpec{Plane::XY, w.pending_angle, 0};
    auto& next = new_proto();  // invalidates proto references
    next.layer = int(w.chain.size());
    add_proto_edge(frontier, next.pid);
    successor[frontier] = next.pid;
    w.chain.push_back(next.pid);
    w.frame ^= 1;
    w.pending_angle = 0.0;
  };

  for (const auto& gate : absorbed.rotations.gates) {
    const auto& ops = gate.axis.ops;
    if (ops.size() == 1 && ops.begin()->second == 1) {
      // Single-qubit X rotation: merge into the frame-1 frontier's angle.
      const int q = ops.begin()->first - 1;
      while (wires[std::size_t(q)].frame != 1) advance(q);
      wires[std::size_t(q)].pending_angle += 2.0 * gate.theta;
      continue;
    }
    for (const auto& [qubit, bits] : ops) {
      const int need = bits == 1 ? 1 : 0;
      while (wires[std::size_t(qubit - 1)].frame != need) advance(qubit - 1);
    }
    auto& leaf = new_proto();
    leaf.is_leaf = true;
    leaf.measure = MeasurementSpec{Plane::YZ, -2.0 * gate.theta, 0};
    int min_layer = INT_MAX;
    for (const auto& [qubit, bits] : ops) {
      (void)bits;
      const auto& w = wires[std::size_t(qubit - 1)];
      add_proto_edge(leaf.pid, w.chain.back());
      min_layer = std::min(min_layer, int(w.chain.size()) - 1);
    }
    leaf.layer = min_layer;
  }

  for (int q = 0; q < n; ++q) {
    auto& w = wires[std::size_t(q)];
    while (w.frame != 0 || w.chain.size() < 3) advance(q);
    proto_at(w.chain.back()).role = VertexRole::Output;
  }

  // Renumber: inputs 1..n, measured interiors next (creation order),
  // outputs last (wire order).
  std::map<int, int> final_id;
  int next_id = 1;
  for (int q = 0; q < n; ++q) final_id[wires[std::size_t(q)].chain.front()] = next_id++;
  for (const auto& p : protos)
    if (p.role == VertexRole::Source && !final_id.count(p.pid)) final_id[p.pid] = next_id++;
  for (int q = 0; q < n; ++q) final_id[wires[std::size_t(q)].chain.back()] = next_id++;

  // Measurement order: topological on the correction-causality relation —
  // each correction operator must touch only vertices measured after its
  // trigger.  A leaf's correction is Z over all its carriers, so the leaf
  // precedes its carriers; a wire vertex v's correction is the severed
  // stabilizer of its successor l (X_l · Z_{N(l)\{v}}), so v precedes l
  // (wire order) and every leaf hanging off l.  Kahn's algorithm with a
  // (layer, leaf-first, creation) priority keeps the order deterministic.
  std::map<int, std::vector<int>> proto_nbh;
  for (const auto& [i, j] : proto_edges) {
    proto_nbh[i].push_back(j);
    proto_nbh[j].push_back(i);
  }
  std::map<int, int> indeg;
  std::map<int, std::vector<int>> dag;
  auto measured_pid = [&](int pid) { return proto_at(pid).measure.has_value(); };
  auto add_dag_edge = [&](int u, int w) {
    dag[u].push_back(w);
    ++indeg[w];
  };
  std::vector<const detail::ProtoVertex*> measured;
  for (const auto& p : protos)
    if (p.measure) {
      measured.push_back(&p);
      indeg.emplace(p.pid, 0);
    }
  for (const auto& w : wires)
    for (std::size_t i = 0; i + 1 < w.chain.size(); ++i)
      if (measured_pid(w.chain[i + 1])) add_dag_edge(w.chain[i], w.chain[i + 1]);
  for (const auto& p : protos) {
    if (!p.measure) continue;
    if (p.is_leaf) {
      for (int c : proto_nbh.at(p.pid))
        if (measured_pid(c)) add_dag_edge(p.pid, c);
    } else {
      const int l = successor.at(p.pid);
      for (int nb : proto_nbh.at(l))
        if (proto_at(nb).is_leaf) add_dag_edge(p.pid, nb);
    }
  }
  using Key = std::tuple<int, int, int>;  // (layer, wire-after-leaf, pid)
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> ready;
  auto key_of = [&](int pid) {
    const auto& p = proto_at(pid);
    return Key{p.layer, p.is_leaf ? 0 : 1, pid};
  };
  for (const auto& [pid, d] : indeg)
    if (d == 0) ready.push(key_of(pid));
  std::map<int, int> order_of;  // pid -> measurement round
  while (!ready.empty()) {
    const int pid = std::get<2>(ready.top());
    ready.pop();
    order_of[pid] = int(order_of.size());
    for (int w : dag[pid])
      if (--indeg.at(w) == 0) ready.push(key_of(w));
  }
  if (order_of.size() != measured.size())
    throw Error("internal: correction-causality relation has a cycle");

  GraphStatePattern pattern;
  for (const auto& p : protos) {
    PatternVertex v;
    v.id = final_id.at(p.pid);
    v.role = p.role;
    v.a = p.a;
    v.b = p.b;
    v.measure = p.measure;
    if (v.measure) v.measure->order = order_of.at(p.pid);
    pattern.add_vertex(v);
  }
  for (const auto& [i, j] : proto_edges) pattern.add_edge(final_id.at(i), final_id.at(j));

  // Declarative byproduct corrections, full supports (see order note above).
  const auto nbh = pattern.neighborhoods();
  auto round_of = [&](int id) {
    const auto& v = pattern.vertex(id);
    return v.measure ? v.measure->order : INT_MAX;  // outputs last
  };
  for (const auto* p : measured) {
    const int v = final_id.at(p->pid);
    Byproduct bp;
    bp.trigger = v;
    if (p->is_leaf) {
      for (int k : nbh.at(v)) bp.correction.set(k, PauliOp::Z);
    } else {
      const int l = final_id.at(successor.at(p->pid));
      bp.correction.set(l, PauliOp::X);
      for (int k : nbh.at(l))
        if (k != v) bp.correction.set(k, PauliOp::Z);
    }
    for (const auto& [k, bits] : bp.correction.ops) {
      (void)bits;
      if (round_of(k) <= round_of(v))
        throw Error("internal: acausal byproduct correction at vertex " +
                    std::to_string(v));
    }
    pattern.byproducts.push_back(std::move(bp));
  }

  for (const auto& g : absorbed.trailing) {
    CliffordGate mapped = g;
    mapped.q1 = final_id.at(wires[std::size_t(g.q1 - 1)].chain.back());
    if (g.kind != CliffordGate::Kind::H)
      mapped.q2 = final_id.at(wires[std::size_t(g.q2 - 1)].chain.back());
    pattern.final_cliffords.push_back(mapped);
  }

  pattern.validate();
  return pattern;
}

inline GraphStatePattern compile(const Circuit& circuit) {
  std::vector<std::pair<Complex, Complex>> inputs(std::size_t(circuit.n),
                                                  {Complex(1.0), Complex(0.0)});
  return compile(circuit, inputs);
}

/// Clifford-gauge alternate path for one single-qubit X rotation: a star
/// graph with vertex 1 = |+⟩ source measured YZ(θ), vertex 2 = input (a,b)
/// measured XY(0), vertex 3 = |+⟩ output, edges 1–3 and 2–3, plus an
/// unconditional final H on the output.  Implements
/// cos(θ/2) − i·sin(θ/2)·X (note the −i: it matches compile()'s X-rotation
/// chain under θ → −θ, up to global phase).  The input is measured first:
/// its outcome-1 correction X₃Z₁ must land while the source is still
/// unmeasured.
inline GraphStatePattern compile_clifford_gauge_rx(double theta,
                                                   std::pair<Complex, Complex> input) {
  if (std::abs(std::norm(input.first) + std::norm(input.second) - 1.0) > 1e-9)
    throw Error("input coefficients are not normalized");
  const Complex isq2(detail::kInvSqrt2, 0.0);
  GraphStatePattern p;
  p.add_vertex({1, VertexRole::Source, isq2, isq2,
                MeasurementSpec{Plane::YZ, theta, 1}});
  p.add_vertex({2, VertexRole::Input, input.first, input.second,
                MeasurementSpec{Plane::XY, 0.0, 0}});
  p.add_vertex({3, VertexRole::Output, isq2, isq2, std::nullopt});
  p.add_edge(1, 3);
  p.add_edge(2, 3);
  Byproduct bp2;
  bp2.trigger = 2;
  bp2.correction.set(3, PauliOp::X);
  bp2.correction.set(1, PauliOp::Z);
  p.byproducts.push_back(bp2);
  Byproduct bp1;
  bp1.trigger = 1;
  bp1.correction.set(3, PauliOp::Z);
  p.byproducts.push_back(bp1);
  p.final_cliffords.push_back(CliffordGate::h(3));
  p.validate();
  return p;
}

/// Assembles the transfer tensor of a measured pattern: the residual (by
/// the graphical rules) times the output generators, in the Pauli basis
/// over the output qubits (ascending output id ↔ tensor position).
/// Requires no output–output edges (the read-off form R·∏(a+bX)).
inline TransferTensor pattern_transfer_tensor(const GraphStatePattern& pattern,
                                              const std::vector<MeasGenerator>& measgens) {
  const auto outs = pattern.outputs();
  const int n = int(outs.size());
  if (n < 1 || n > 8) throw Error("tensor read-off supports 1..8 output qubits");
  for (const auto& [i, j] : pattern.edges)
    if (pattern.vertex(i).role == VertexRole::Output &&
        pattern.vertex(j).role == VertexRole::Output)
      throw Error("tensor read-off requires no output-output edges");

  std::vector<int> measured;
  measured.reserve(measgens.size());
  for (const auto& m : measgens) measured.push_back(m.qubit);
  const Residual r = residual_by_rules(pattern, measured, measgens);

  std::map<int, int> pos_of;  // output id -> 0-based tensor position
  for (int k = 0; k < n; ++k) pos_of[outs[std::size_t(k)]] = k;

  UnitarySupplement eta(n, std::vector<Complex>(detail::pow4(n), Complex(0.0)));
  for (const auto& [support, coeff] : r.terms) {
    std::uint32_t zmask = 0;
    for (int q : support) {
      auto it = pos_of.find(q);
      if (it == pos_of.end())
        throw Error("residual support includes non-output vertex " + std::to_string(q));
      zmask |= 1u << it->second;
    }
    // Per output qubit the factor is Z^{z}·(a + b·X) = [[a,b],[±b,±a]].
    for (std::size_t idx = 0; idx < eta.entries.size(); ++idx) {
      Complex val = coeff;
      for (int k = 0; k < n && val != Complex(0.0); ++k) {
        const int digit = int((idx >> (2 * (n - 1 - k))) & 3u);
        const int row = digit >> 1, col = digit & 1;
        const auto& v = pattern.vertex(outs[std::size_t(k)]);
        Complex e = (row == col) ? v.a : v.b;
        if ((zmask >> k) & 1u && row == 1) e = -e;
        val *= e;
      }
      eta.entries[idx] += val;
    }
  }
  return m_forward(eta);
}

/// Result of reading a graph fragment off a symmetrized transfer tensor.
/// Measured nodes carry the recovered idle/interactive products as their
/// (a,b) with a placeholder XY(0) spec: the split between state and
/// measurement coefficients is not recoverable from the tensor, only the
/// products A_i, B_i are (stored normalized, see `factor_ratios`).
struct ResidualAnalysis {
  GraphStatePattern fragment;
  std::vector<Complex> factor_ratios;  // B_i / A_i per measured node
  std::string notes;
};

/// Reads generator coefficients, residual coefficients, and graph edges off
/// a symmetrized transfer tensor (outputs = tensor positions 1..n, measured
/// nodes n+1..n+m):
///   * output (a_k, b_k) from the lower-index slice ratios,
///   * residual coefficients C_u from the capital column,
///   * one measured node per minimal ("atomic") support — requires every
///     single-interactive term to carry a distinct nonempty Z-support,
///   * measured–output edges from the atomic Z-supports and
///     measured–measured edges from the minus-sign pattern of the joint
///     terms, validated by exact reconstruction of every term; inconsistent
///     or ambiguous sign patterns raise errors listing the offending terms.
inline ResidualAnalysis analyze_residual(const TransferTensor& tprime) {
  if (!check_symmetry(tprime))
    throw Error("tensor fails the symmetry check; apply the fully symmetric gauge first");
  const int n = tprime.n;
  const std::size_t size = tprime.entries.size();

  double max_abs = 0.0;
  for (const auto& e : tprime.entries) max_abs = std::max(max_abs, std::abs(e));
  if (max_abs == 0.0) throw Error("cannot analyze the zero tensor");
  const double eps = 1e-9 * max_abs;

  // Output coefficients from per-position slice ratios.
  std::vector<std::pair<Complex, Complex>> outputs;
  for (int k = 1; k <= n; ++k) {
    const std::size_t stride = detail::pow4(n - k);
    Complex u0(0.0), v0(0.0);
    double best = -1.0;
    for (std::size_t idx = 0; idx < size; ++idx) {
      if ((idx / stride) & 1u) continue;
      const Complex u = tprime.entries[idx], v = tprime.entries[idx + stride];
      const double mag = std::abs(u) + std::abs(v);
      if (mag > best) {
        best = mag;
        u0 = u;
        v0 = v;
      }
    }
    const double nrm = std::sqrt(std::norm(u0) + std::norm(v0));
    if (nrm < eps)
      throw Error("tensor position " + std::to_string(k) + " has an all-zero slice");
    outputs.emplace_back(u0 / nrm, v0 / nrm);
  }

  // Residual coefficients: divide the column at the per-position pivot
  // component by the recovered output factors.
  const std::size_t num_supports = std::size_t{1} << n;
  std::vector<Complex> c(num_supports);
  for (std::uint32_t u = 0; u < num_supports; ++u) {
    std::size_t idx = 0;
    Complex denom(1.0);
    for (int k = 0; k < n; ++k) {
      const auto& [a, b] = outputs[std::size_t(k)];
      const int lower = std::abs(a) >= std::abs(b) ? 0 : 1;
      const int capital = int((u >> (n - 1 - k)) & 1u);
      idx = idx * 4 + std::size_t(2 * capital + lower);
      denom *= lower == 0 ? a : b;
    }
    c[u] = tprime.entries[idx] / denom;
  }

  auto support_text = [n](std::uint32_t u) {
    std::string s = "{";
    for (int k = 0; k < n; ++k)
      if ((u >> (n - 1 - k)) & 1u) s += std::to_string(k + 1) + ",";
    if (s.back() == ',') s.pop_back();
    return s + "}";
  };

  if (std::abs(c[0]) <= eps)
    throw Error("identity residual coefficient vanishes; the idle products are "
                "unrecoverable");

  std::vector<std::uint32_t> live;
  for (std::uint32_t u = 1; u < num_supports; ++u)
    if (std::abs(c[u]) > eps) live.push_back(u);

  int m = 0;
  while ((std::size_t{1} << m) < live.size() + 1) ++m;
  if ((std::size_t{1} << m) != live.size() + 1) {
    std::string terms;
    for (auto u : live) terms += " " + support_text(u);
    throw Error("residual has " + std::to_string(live.size() + 1) +
                " nonzero terms, not a power of two; supports collide or the "
                "tensor is not a compiled-graph residual; terms:" + terms);
  }
  if (m > 5) throw Error("analysis limited to 5 measured nodes");

  // Search all (atom choice, edge set) pairs; demand a unique exact match.
  struct Match {
    std::vector<std::uint32_t> atoms;
    std::uint32_t edge_mask;
  };
  std::vector<Match> matches;
  std::vector<std::uint32_t> combo(static_cast<std::size_t>(m));
  const int pairs = m * (m - 1) / 2;
  const int lcount = int(live.size());

  auto try_combo = [&](const std::vector<int>& sel) {
    for (int i = 0; i < m; ++i) combo[std::size_t(i)] = live[std::size_t(sel[std::size_t(i)])];
    std::vector<Complex> ratio(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ratio[std::size_t(i)] = c[combo[std::size_t(i)]] / c[0];
    for (std::uint32_t emask = 0; emask < (1u << pairs); ++emask) {
      bool ok = true;
      for (std::uint32_t s = 0; s < (1u << m) && ok; ++s) {
        std::uint32_t supp = 0;
        Complex pred = c[0];
        int inside = 0, pair_idx = 0;
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j < m; ++j, ++pair_idx)
            if ((s >> i & 1u) && (s >> j & 1u) && (emask >> pair_idx & 1u)) ++inside;
          if (s >> i & 1u) {
            supp ^= combo[std::size_t(i)];
            pred *= ratio[std::size_t(i)];
          }
        }
        if (inside % 2) pred = -pred;
        const Complex actual = c[supp];
        if (std::abs(actual - pred) > 1e-8 * std::max({1.0, std::abs(actual), std::abs(pred)}))
          ok = false;
        // Every predicted support must be live (or empty); collisions
        // between distinct subsets were already excluded by the count.
        if (ok && s != 0 && std::abs(c[supp]) <= eps) ok = false;
      }
      if (ok) matches.push_back(Match{combo, emask});
    }
  };

  // Enumerate m-combinations of live supports.
  std::vector<int> idxs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idxs[std::size_t(i)] = i;
  if (m == 0) {
    if (!live.empty()) throw Error("internal: live terms with zero measured nodes");
  } else {
    while (true) {
      try_combo(idxs);
      int i = m - 1;
      while (i >= 0 && idxs[std::size_t(i)] == lcount - m + i) --i;
      if (i < 0) break;
      ++idxs[std::size_t(i)];
      for (int j = i + 1; j < m; ++j) idxs[std::size_t(j)] = idxs[std::size_t(j - 1)] + 1;
    }
  }

  // Deduplicate structurally identical matches (atom sets are combinations,
  // so matches differ only when atoms or edges differ).
  std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    if (a.atoms != b.atoms) return a.atoms < b.atoms;
    return a.edge_mask < b.edge_mask;
  });
  matches.erase(std::unique(matches.begin(), matches.end(),
                            [](const Match& a, const Match& b) {
                              return a.atoms == b.atoms && a.edge_mask == b.edge_mask;
                            }),
                matches.end());
  if (m > 0 && matches.empty()) {
    std::string terms;
    for (auto u : live) terms += " " + support_text(u) + "=" +
                                 detail::format_double(std::abs(c[u]));
    throw Error("sign pattern inconsistent with any simple graph; terms:" + terms);
  }
  if (matches.size() > 1)
    throw Error("analysis is ambiguous: " + std::to_string(matches.size()) +
                " distinct graphs reproduce the residual");

  ResidualAnalysis out;
  for (int k = 1; k <= n; ++k)
    out.fragment.add_vertex({k, VertexRole::Output, outputs[std::size_t(k - 1)].first,
                             outputs[std::size_t(k - 1)].second, std::nullopt});
  if (m > 0) {
    const auto& match = matches.front();
    for (int i = 0; i < m; ++i) {
      const Complex r = c[match.atoms[std::size_t(i)]] / c[0];
      const double nrm = std::sqrt(1.0 + std::norm(r));
      out.fragment.add_vertex({n + 1 + i, VertexRole::Source, Complex(1.0) / nrm,
                               r / nrm, MeasurementSpec{Plane::XY, 0.0, i}});
      out.factor_ratios.push_back(r);
      for (int k = 0; k < n; ++k)
        if ((match.atoms[std::size_t(i)] >> (n - 1 - k)) & 1u)
          out.fragment.add_edge(n + 1 + i, k + 1);
    }
    int pair_idx = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j, ++pair_idx)
        if ((match.edge_mask >> pair_idx) & 1u)
          out.fragment.add_edge(n + 1 + i, n + 1 + j);
  }
  out.notes =
      "measured-node (a,b) hold the normalized idle/interactive products; the "
      "state/measurement split is gauge freedom";
  return out;
}

/// Backbone-aware analysis overload: reproduces the worked single-rotation
/// read-off where the measured factor products (A_i, B_i) are known.  The
/// assumed shape is: per tensor position one |+⟩ output fed by one |+⟩
/// middle node, plus the given factor nodes; the search infers
/// factor–middle and factor–factor edges by exact tensor reconstruction.
inline ResidualAnalysis analyze_residual(
    const TransferTensor& tprime,
    const std::vector<std::pair<Complex, Complex>>& factor_products) {
  if (!check_symmetry(tprime))
    throw Error("tensor fails the symmetry check; apply the fully symmetric gauge first");
  const int n = tprime.n;
  const int m = int(factor_products.size());
  const int bits = m * n + m * (m - 1) / 2;
  if (bits > 16) throw Error("backbone edge search limited to 16 candidate edges");

  const Complex isq2(detail::kInvSqrt2, 0.0);
  auto build = [&](std::uint32_t mask) {
    GraphStatePattern p;
    for (int k = 1; k <= n; ++k)
      p.add_vertex({k, VertexRole::Output, isq2, isq2, std::nullopt});
    for (int k = 1; k <= n; ++k) {
      p.add_vertex({n + k, VertexRole::Source, isq2, isq2,
                    MeasurementSpec{Plane::XY, 0.0, m + k - 1}});
      p.add_edge(n + k, k);
    }
    for (int i = 0; i < m; ++i) {
      const auto& [ai, bi] = factor_products[std::size_t(i)];
      const double nrm = std::sqrt(std::norm(ai) + std::norm(bi));
      if (nrm < 1e-300) throw Error("factor product pair is zero");
      p.add_vertex({2 * n + 1 + i, VertexRole::Source, ai / nrm, bi / nrm,
                    MeasurementSpec{Plane::XY, 0.0, i}});
    }
    int bit = 0;
    for (int i = 0; i < m; ++i)
      for (int k = 1; k <= n; ++k, ++bit)
        if ((mask >> bit) & 1u) p.add_edge(2 * n + 1 + i, n + k);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j, ++bit)
        if ((mask >> bit) & 1u) p.add_edge(2 * n + 1 + i, 2 * n + 1 + j);
    return p;
  };

  auto tensor_of = [&](const GraphStatePattern& p) {
    std::vector<MeasGenerator> gens;
    for (int i = 0; i < m; ++i)
      gens.push_back({2 * n + 1 + i, isq2, isq2});
    for (int k = 1; k <= n; ++k) gens.push_back({n + k, isq2, isq2});
    return pattern_transfer_tensor(p, gens);
  };

  auto collinear = [](const TransferTensor& x, const TransferTensor& y) {
    Complex xy(0.0);
    double xx = 0.0, yy = 0.0;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
      xy += std::conj(x.entries[i]) * y.entries[i];
      xx += std::norm(x.entries[i]);
      yy += std::norm(y.entries[i]);
    }
    if (xx < 1e-300 || yy < 1e-300) return false;
    return std::abs(xy) / std::sqrt(xx * yy) > 1.0 - 1e-8;
  };

  std::vector<std::uint32_t> found;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    const auto p = build(mask);
    if (collinear(tensor_of(p), tprime)) found.push_back(mask);
  }
  if (found.empty())
    throw Error("no backbone graph over the given factor products reproduces the tensor");
  if (found.size() > 1)
    throw Error("backbone analysis is ambiguous: " + std::to_string(found.size()) +
                " edge sets reproduce the tensor");

  ResidualAnalysis out;
  out.fragment = build(found.front());
  for (const auto& [ai, bi] : factor_products) out.factor_ratios.push_back(bi / ai);
  out.notes = "backbone mode: per-position |+> middles assumed; factor products given";
  return out;
}

// ---------------------------------------------------------------------------
// Resource accounting (closed forms; exact integer arithmetic).

enum class ResourceAlgo { QFT, QAOACyclic, QAOAComplete, Generic };
enum class ResourceMethod { MCalculus, FullySymmetric };

inline const char* algo_label(ResourceAlgo a) {
  switch (a) {
    case ResourceAlgo::QFT: return "qft";
    case ResourceAlgo::QAOACyclic: return "qaoa-cyclic";
    case ResourceAlgo::QAOAComplete: return "qaoa-complete";
    case ResourceAlgo::Generic: return "generic";
  }
  throw Error("invalid ResourceAlgo tag");
}

inline const char* method_label(ResourceMethod m) {
  return m == ResourceMethod::MCalculus ? "mcalculus" : "fully-symmetric";
}

struct ResourceReport {
  ResourceAlgo algo;
  ResourceMethod method;
  long long n = 0;
  long long p = 1;
  long long qubit_count = 0;
  std::string formula;
  std::optional<long long> table_variant;  // printed table value when it differs
  std::vector<std::string> notes;
};

/// Closed-form qubit counts.  `p` is the round count for the QAOA families
/// (ignored by QFT); `n_ops` is the rotation count for Generic.  The
/// QAOA-complete fully-symmetric derivation disagrees with the printed
/// table; the derivation is normative and the printed value is surfaced in
/// `table_variant` plus a note.
inline ResourceReport count_resources(ResourceAlgo algo, long long n, long long p,
                                      ResourceMethod method, long long n_ops = 0) {
  if (n < 1) throw Error("n must be at least 1");
  if (algo == ResourceAlgo::QAOACyclic || algo == ResourceAlgo::QAOAComplete)
    if (p < 1) throw Error("p must be at least 1");
  ResourceReport r;
  r.algo = algo;
  r.method = method;
  r.n = n;
  r.p = p;
  const bool mc = method == ResourceMethod::MCalculus;
  switch (algo) {
    case ResourceAlgo::QFT:
      if (mc) {
        r.qubit_count = 3 * n * n + 2 * n;
        r.formula = "5n + 3n(n-1) = 3n^2 + 2n";
      } else {
        r.qubit_count = 3 * n + 3 * n * (n - 1) / 2;
        r.formula = "3n + (3/2)n(n-1)";
      }
      break;
    case ResourceAlgo::QAOACyclic:
      if (mc) {
        r.qubit_count = n * (1 + 7 * p);
        r.formula = "n(1 + 7p)";
      } else {
        r.qubit_count = 2 * n * (1 + p);
        r.formula = "2n(1 + p)";
      }
      break;
    case ResourceAlgo::QAOAComplete:
      if (mc) {
        r.qubit_count = n + 2 * p * n * (n - 1) + 3 * p * n;
        r.formula = "n + 2pn(n-1) + 3pn";
      } else {
        r.qubit_count = 2 * n + p * n * (n - 1) / 2 + n * p;
        r.formula = "2n + (1/2)pn(n-1) + np";
        r.table_variant = (p * n * n + 3 * p * n - 4 * n) / 2;
        r.notes.push_back(
            "printed-table fully-symmetric entry (1/2)pn^2 + n((3/2)p - 2) "
            "disagrees with the derivation; qubit_count follows the "
            "derivation, table_variant the printed value");
      }
      break;
    case ResourceAlgo::Generic:
      if (mc)
        throw Error("no closed form for the M-Calculus cost of a generic circuit");
      if (n_ops < 0) throw Error("operation count must be nonnegative");
      r.qubit_count = 3 * n + n_ops;
      r.formula = "3n_inputs + n_operations";
      break;
  }
  return r;
}

}  // namespace mbqc

#pragma once
// Graph-state data model: vertices carrying a role (input / source / output)
// and generator coefficients (a, b), undirected entanglement edges,
// measurement specifications (plane, angle, explicit integer round),
// declarative outcome-conditioned byproduct corrections, and an optional
// list of unconditional final Clifford corrections on output vertices.
//
// Everything is a value type; operations are pure and deterministic.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mbqc/pauli.hpp"

namespace mbqc {

enum class VertexRole { Input, Source, Output };

inline const char* role_label(VertexRole r) {
  switch (r) {
    case VertexRole::Input: return "input";
    case VertexRole::Source: return "source";
    case VertexRole::Output: return "output";
  }
  throw Error("invalid VertexRole tag");
}

inline VertexRole role_from_label(const std::string& s) {
  if (s == "input") return VertexRole::Input;
  if (s == "source") return VertexRole::Source;
  if (s == "output") return VertexRole::Output;
  throw Error("unknown vertex role '" + s + "'");
}

/// The three single-qubit projective measurement families.
enum class Plane { XY, YZ, XZ };

inline const char* plane_label(Plane p) {
  switch (p) {
    case Plane::XY: return "XY";
    case Plane::YZ: return "YZ";
    case Plane::XZ: return "XZ";
  }
  throw Error("invalid Plane tag");
}

inline Plane plane_from_label(const std::string& s) {
  if (s == "XY") return Plane::XY;
  if (s == "YZ") return Plane::YZ;
  if (s == "XZ") return Plane::XZ;
  throw Error("unknown measurement plane '" + s + "'");
}

/// Measurement bra for outcome s ∈ {0,1}, returned as the ket-side (α, β)
/// of ⟨γ| = ⟨0|[α* + β*·X].  Closed forms per plane:
///   XY(θ): (α*, β*) = (1, ±e^{−iθ})/√2
///   YZ(θ): s=0 → (cos θ/2, −i·sin θ/2); s=1 → (−i·sin θ/2, cos θ/2)
///   XZ(θ): s=0 → (cos θ/2, sin θ/2);   s=1 → (sin θ/2, −cos θ/2)
inline MeasGenerator plane_generator(Plane plane, double angle, int s, int qubit) {
  if (s != 0 && s != 1) throw Error("measurement outcome must be 0 or 1");
  const double half = angle / 2.0;
  const double c = std::cos(half), d = std::sin(half);
  const double isq2 = 1.0 / std::sqrt(2.0);
  MeasGenerator m;
  m.qubit = qubit;
  switch (plane) {
    case Plane::XY: {
      // alpha/beta are ket-side: β* = ±e^{−iθ}/√2 ⇒ β = ±e^{+iθ}/√2.
      m.alpha = Complex(isq2, 0.0);
      m.beta = std::polar(isq2, angle) * (s == 0 ? 1.0 : -1.0);
      break;
    }
    case Plane::YZ: {
      if (s == 0) {
        m.alpha = Complex(c, 0.0);
        m.beta = Complex(0.0, d);  // β* = −i sin(θ/2)
      } else {
        m.alpha = Complex(0.0, d);  // α* = −i sin(θ/2)
        m.beta = Complex(c, 0.0);
      }
      break;
    }
    case Plane::XZ: {
      if (s == 0) {
        m.alpha = Complex(c, 0.0);
        m.beta = Complex(d, 0.0);
      } else {
        m.alpha = Complex(d, 0.0);
        m.beta = Complex(-c, 0.0);
      }
      break;
    }
  }
  return m;
}

struct MeasurementSpec {
  Plane plane = Plane::XY;
  double angle = 0.0;
  int order = 0;  // measurement round; total order over measured vertices

  bool operator==(const MeasurementSpec& o) const {
    return plane == o.plane && angle == o.angle && order == o.order;
  }
};

struct PatternVertex {
  int id = 0;
  VertexRole role = VertexRole::Source;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  std::optional<MeasurementSpec> measure;

  bool operator==(const PatternVertex& o) const {
    return id == o.id && role == o.role && a == o.a && b == o.b && measure == o.measure;
  }
};

/// Outcome-conditioned correction: when `trigger`'s measurement yields s=1,
/// apply `correction` to the still-unmeasured qubits.  Stored as data; the
/// simulator interprets it.
struct Byproduct {
  int trigger = 0;
  PauliTerm correction;

  bool operator==(const Byproduct& o) const {
    return trigger == o.trigger && correction.coeff == o.correction.coeff &&
           correction.ops == o.correction.ops;
  }
};

/// The compiler's output: an open graph state plus measurement program.
struct GraphStatePattern {
  std::map<int, PatternVertex> vertices;       // keyed by id
  std::set<std::pair<int, int>> edges;         // normalized (min, max) pairs
  std::vector<Byproduct> byproducts;           // outcome-conditioned
  std::vector<CliffordGate> final_cliffords;   // unconditional, on outputs

  void add_vertex(PatternVertex v) {
    if (vertices.count(v.id))
      throw Error("duplicate vertex id " + std::to_string(v.id));
    vertices.emplace(v.id, std::move(v));
  }

  PatternVertex& vertex(int id) {
    auto it = vertices.find(id);
    if (it == vertices.end()) throw Error("unknown vertex id " + std::to_string(id));
    return it->second;
  }
  const PatternVertex& vertex(int id) const {
    auto it = vertices.find(id);
    if (it == vertices.end()) throw Error("unknown vertex id " + std::to_string(id));
    return it->second;
  }

  static std::pair<int, int> edge_key(int i, int j) {
    return {std::min(i, j), std::max(i, j)};
  }

  void add_edge(int i, int j) {
    if (i == j) throw Error("self-loop rejected on vertex " + std::to_string(i));
    if (!vertices.count(i) || !vertices.count(j))
      throw Error("edge references unknown vertex");
    edges.insert(edge_key(i, j));
  }

  /// CZ involution: inserts the edge if absent, removes it if present.
  void toggle_edge(int i, int j) {
    if (i == j) throw Error("self-loop rejected on vertex " + std::to_string(i));
    if (!vertices.count(i) || !vertices.count(j))
      throw Error("edge references unknown vertex");
    const auto key = edge_key(i, j);
    auto it = edges.find(key);
    if (it == edges.end()) {
      edges.insert(key);
    } else {
      edges.erase(it);
    }
  }

  bool has_edge(int i, int j) const { return edges.count(edge_key(i, j)) != 0; }

  /// Throws with a descriptive message if any structural invariant fails.
  void validate() const {
    for (const auto& [i, j] : edges) {
      if (i == j) throw Error("self-loop on vertex " + std::to_string(i));
      if (!vertices.count(i) || !vertices.count(j))
        throw Error("edge (" + std::to_string(i) + "," + std::to_string(j) +
                    ") references an unknown vertex");
    }
    std::set<int> orders;
    for (const auto& [id, v] : vertices) {
      if (v.id != id) throw Error("vertex key/id mismatch");
      const double norm2 = std::norm(v.a) + std::norm(v.b);
      if (std::abs(norm2 - 1.0) > 1e-9)
        throw Error("vertex " + std::to_string(id) +
                    " coefficients are not normalized (|a|^2+|b|^2 = " +
                    detail::format_double(norm2) + ")");
      if (v.role == VertexRole::Output) {
        if (v.measure)
          throw Error("output vertex " + std::to_string(id) + " must not be measured");
      } else {
        if (!v.measure)
          throw Error("vertex " + std::to_string(id) +
                      " is not an output and needs a measurement spec");
        if (!orders.insert(v.measure->order).second)
          throw Error("duplicate measurement order " + std::to_string(v.measure->order));
      }
    }
    for (const auto& bp : byproducts) {
      if (!vertices.count(bp.trigger))
        throw Error("byproduct trigger references unknown vertex " +
                    std::to_string(bp.trigger));
      for (const auto& [q, bits] : bp.correction.ops) {
        (void)bits;
        if (!vertices.count(q))
          throw Error("byproduct correction references unknown vertex " +
                      std::to_string(q));
      }
    }
    for (const auto& g : final_cliffords) {
      if (!vertices.count(g.q1) || (g.kind != CliffordGate::Kind::H && !vertices.count(g.q2)))
        throw Error("final Clifford references an unknown vertex");
    }
  }

  /// N(i) for every vertex.
  std::map<int, std::set<int>> neighborhoods() const {
    std::map<int, std::set<int>> n;
    for (const auto& [id, v] : vertices) {
      (void)v;
      n[id];
    }
    for (const auto& [i, j] : edges) {
      n[i].insert(j);
      n[j].insert(i);
    }
    return n;
  }

  /// One Generator per vertex, K_i = X_i ⊗ Z_{N(i)}; pairwise commuting.
  std::vector<Generator> build_state() const {
    validate();
    const auto nbh = neighborhoods();
    std::vector<Generator> gens;
    gens.reserve(vertices.size());
    for (const auto& [id, v] : vertices) {
      Generator g;
      g.qubit = id;
      g.a = v.a;
      g.b = v.b;
      g.neighborhood = nbh.at(id);
      gens.push_back(std::move(g));
    }
    return gens;
  }

  /// Measured vertex ids sorted by (round, id).
  std::vector<int> measured_order() const {
    std::vector<int> ids;
    for (const auto& [id, v] : vertices)
      if (v.measure) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [this](int l, int r) {
      const auto& ml = *vertices.at(l).measure;
      const auto& mr = *vertices.at(r).measure;
      if (ml.order != mr.order) return ml.order < mr.order;
      return l < r;
    });
    return ids;
  }

  /// Output vertex ids, ascending.
  std::vector<int> outputs() const {
    std::vector<int> ids;
    for (const auto& [id, v] : vertices)
      if (v.role == VertexRole::Output) ids.push_back(id);
    return ids;
  }

  bool operator==(const GraphStatePattern& o) const {
    return vertices == o.vertices && edges == o.edges && byproducts == o.byproducts &&
           final_cliffords == o.final_cliffords;
  }
};

}  // namespace mbqc

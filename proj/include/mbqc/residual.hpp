#pragma once
// Residual operator of a measurement sequence, computed two independent
// ways:
//   * measure_one — exact symbolic recursion: measuring qubit q maps each
//     residual term c·Z_S to
//       α*a · c · Z_{S\{q}}  +  β*b · c · (−1)^{[q∈S]} · Z_{(S Δ N(q))\{q}}
//     and severs q from the surviving generators;
//   * residual_by_rules — the combinatorial read-off: one factor A_i = α*_i a_i
//     or B_i = β*_i b_i per measured qubit, Z-support = symmetric-difference
//     neighborhood of the interactive subset minus the measured set, and a
//     sign (−1)^{#edges inside the interactive subset}.
// crosscheck() requires the two to agree termwise.
//
// Coefficients are post-selection branch amplitudes; nothing renormalizes.

#include <algorithm>
#include <map>
#include <vector>

#include "mbqc/graph.hpp"
#include "mbqc/pauli.hpp"

namespace mbqc {

/// Linear combination of Z-strings over unmeasured qubits.
struct Residual {
  // key: sorted qubit ids carrying Z; empty key = identity term
  std::map<std::vector<int>, Complex> terms;

  static Residual one() {
    Residual r;
    r.terms[{}] = Complex(1.0, 0.0);
    return r;
  }

  void add(std::vector<int> support, Complex c) {
    auto it = terms.find(support);
    if (it == terms.end()) {
      terms.emplace(std::move(support), c);
    } else {
      it->second += c;
    }
  }

  /// Drops terms with |coeff| <= eps.
  void prune(double eps = 1e-15) {
    for (auto it = terms.begin(); it != terms.end();) {
      if (std::abs(it->second) <= eps) {
        it = terms.erase(it);
      } else {
        ++it;
      }
    }
  }

  Complex coeff(const std::vector<int>& support) const {
    auto it = terms.find(support);
    return it == terms.end() ? Complex(0.0, 0.0) : it->second;
  }
};

/// Termwise comparison with absolute-or-relative tolerance.
inline bool residuals_match(const Residual& r1, const Residual& r2,
                            double tol = 1e-12) {
  auto check = [tol](const Residual& a, const Residual& b) {
    for (const auto& [sup, c] : a.terms) {
      const Complex d = b.coeff(sup);
      if (std::abs(c - d) > tol * std::max({1.0, std::abs(c), std::abs(d)}))
        return false;
    }
    return true;
  };
  return check(r1, r2) && check(r2, r1);
}

/// One recursion step: measure m.qubit, update the residual, sever the qubit
/// from the surviving generators.  Returns the new (generators, residual).
inline std::pair<std::vector<Generator>, Residual> measure_one(
    std::vector<Generator> state, const Residual& residual, const MeasGenerator& m) {
  auto it = std::find_if(state.begin(), state.end(),
                         [&m](const Generator& g) { return g.qubit == m.qubit; });
  if (it == state.end())
    throw Error("qubit " + std::to_string(m.qubit) +
                " is not present or was already measured");
  const Generator g = *it;
  state.erase(it);

  const Complex idle = std::conj(m.alpha) * g.a;
  const Complex inter = std::conj(m.beta) * g.b;

  Residual out;
  for (const auto& [sup, c] : residual.terms) {
    // Idle branch: Z_S with q's own Z (if any) absorbed by ⟨0|Z = ⟨0|.
    std::vector<int> idle_sup;
    idle_sup.reserve(sup.size());
    bool q_in_sup = false;
    for (int q : sup) {
      if (q == m.qubit) {
        q_in_sup = true;
      } else {
        idle_sup.push_back(q);
      }
    }
    out.add(idle_sup, idle * c);

    // Interactive branch: X_q anticommutes with an existing Z_q (sign),
    // support becomes (S Δ N(q)) \ {q}.
    std::vector<int> inter_sup = idle_sup;
    for (int j : g.neighborhood) {
      auto pos = std::lower_bound(inter_sup.begin(), inter_sup.end(), j);
      if (pos != inter_sup.end() && *pos == j) {
        inter_sup.erase(pos);
      } else {
        inter_sup.insert(pos, j);
      }
    }
    out.add(inter_sup, inter * c * (q_in_sup ? -1.0 : 1.0));
  }
  out.prune();

  for (auto& rest : state) rest.neighborhood.erase(m.qubit);
  return {std::move(state), std::move(out)};
}

/// Folds measure_one over the pattern's state in the order of `measgens`.
inline Residual fold_measurements(const GraphStatePattern& pattern,
                                  const std::vector<MeasGenerator>& measgens) {
  auto state = pattern.build_state();
  Residual r = Residual::one();
  for (const auto& m : measgens) {
    auto [next_state, next_r] = measure_one(std::move(state), r, m);
    state = std::move(next_state);
    r = std::move(next_r);
  }
  return r;
}

/// Combinatorial evaluation via the coefficient/sign rules.  `measured`
/// pairs positionally with `measgens` (qubit fields must agree).
inline Residual residual_by_rules(const GraphStatePattern& pattern,
                                  const std::vector<int>& measured,
                                  const std::vector<MeasGenerator>& measgens) {
  if (measured.size() != measgens.size())
    throw Error("measured-vertex list and measurement-generator list differ in size");
  const std::size_t m = measured.size();
  if (m > 24) throw Error("graphical-rule enumeration limited to 24 measured qubits");
  for (std::size_t i = 0; i < m; ++i)
    if (measured[i] != measgens[i].qubit)
      throw Error("measurement generator order does not match measured-vertex list");

  pattern.validate();
  const auto nbh = pattern.neighborhoods();
  std::vector<Complex> idle(m), inter(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& v = pattern.vertex(measured[i]);
    idle[i] = std::conj(measgens[i].alpha) * v.a;
    inter[i] = std::conj(measgens[i].beta) * v.b;
  }
  std::set<int> measured_set(measured.begin(), measured.end());
  if (measured_set.size() != m) throw Error("duplicate qubit in measured list");

  Residual r;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Complex c(1.0, 0.0);
    std::set<int> delta;  // symmetric difference of interactive neighborhoods
    int inside_edges = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (1u << i))) {
        c *= idle[i];
        continue;
      }
      c *= inter[i];
      for (std::size_t j = i + 1; j < m; ++j)
        if ((mask & (1u << j)) && pattern.has_edge(measured[i], measured[j]))
          ++inside_edges;
      for (int k : nbh.at(measured[i])) {
        auto it = delta.find(k);
        if (it == delta.end()) {
          delta.insert(k);
        } else {
          delta.erase(it);
        }
      }
    }
    if (inside_edges % 2 != 0) c = -c;
    std::vector<int> support;
    for (int k : delta)
      if (!measured_set.count(k)) support.push_back(k);
    r.add(std::move(support), c);
  }
  r.prune();
  return r;
}

/// True iff the recursion and the graphical rules agree termwise (1e−12).
inline bool crosscheck(const GraphStatePattern& pattern,
                       const std::vector<MeasGenerator>& measgens) {
  std::vector<int> measured;
  measured.reserve(measgens.size());
  for (const auto& g : measgens) measured.push_back(g.qubit);
  const Residual recursive = fold_measurements(pattern, measgens);
  const Residual ruled = residual_by_rules(pattern, measured, measgens);
  return residuals_match(recursive, ruled, 1e-12);
}

}  // namespace mbqc

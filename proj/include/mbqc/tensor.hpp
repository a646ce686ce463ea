#pragma once
// Tensor stack: unitary supplement η (canonical matrix-unit basis
// e00,e01,e10,e11 ↔ 0..3), transfer tensor T (Pauli basis I,X,Z,ZX ↔ 0..3),
// the per-index isomorphism T = M·η and its inverse, the vector supplement
// (first matrix column, η|0…0⟩), the index group ∘, slice-proportionality
// symmetry checking, and gauge application including the fully symmetric
// gauge S^f and the single-qubit (γ, γ′) shift family.
//
// Layout: flat row-major over qubit-ordered 4-ary digits; qubit 1 is the
// most significant digit.  Single-qubit matrix format (T00,T01;T10,T11)
// corresponds to flat order (I, X, Z, ZX).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mbqc/pauli.hpp"

namespace mbqc {

using Mat4 = std::array<Complex, 16>;  // row-major 4×4

namespace detail {

inline std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

inline void check_rank(int n) {
  if (n < 1 || n > 8) throw Error("tensor rank must be between 1 and 8");
}

/// Applies a 4×4 matrix along one axis (1-based qubit position) of a
/// rank-n 4-ary tensor stored flat row-major.
inline void apply_axis(std::vector<Complex>& e, int n, int position, const Mat4& m) {
  const std::size_t stride = pow4(n - position);   // distance between digit values
  const std::size_t block = stride * 4;            // one full digit cycle
  std::array<Complex, 4> in;
  for (std::size_t base = 0; base < e.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (int d = 0; d < 4; ++d) in[std::size_t(d)] = e[base + off + d * stride];
      for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int cidx = 0; cidx < 4; ++cidx)
          acc += m[std::size_t(r * 4 + cidx)] * in[std::size_t(cidx)];
        e[base + off + std::size_t(r) * stride] = acc;
      }
    }
  }
}

}  // namespace detail

/// Basis-change matrix M : canonical → Pauli, exact in doubles.
inline const Mat4& m_matrix() {
  static const Mat4 m = {
      Complex(0.5), Complex(0.0), Complex(0.0),  Complex(0.5),
      Complex(0.0), Complex(0.5), Complex(0.5),  Complex(0.0),
      Complex(0.5), Complex(0.0), Complex(0.0),  Complex(-0.5),
      Complex(0.0), Complex(0.5), Complex(-0.5), Complex(0.0)};
  return m;
}

/// Inverse basis change M⁻¹ : Pauli → canonical (integer entries).
inline const Mat4& m_inverse_matrix() {
  static const Mat4 m = {
      Complex(1.0), Complex(0.0), Complex(1.0),  Complex(0.0),
      Complex(0.0), Complex(1.0), Complex(0.0),  Complex(1.0),
      Complex(0.0), Complex(1.0), Complex(0.0),  Complex(-1.0),
      Complex(1.0), Complex(0.0), Complex(-1.0), Complex(0.0)};
  return m;
}

/// Rank-n tensor in the canonical matrix-unit basis; reconstructing the
/// 2ⁿ×2ⁿ matrix from the entries reproduces Û·∏G_i.
struct UnitarySupplement {
  int n = 1;
  std::vector<Complex> entries;  // size 4^n, flat row-major

  UnitarySupplement() : entries(4, Complex(0.0)) {}
  UnitarySupplement(int rank, std::vector<Complex> e) : n(rank), entries(std::move(e)) {
    detail::check_rank(n);
    if (entries.size() != detail::pow4(n))
      throw Error("supplement entry count does not match rank");
  }
};

/// Rank-n tensor in the Pauli basis (I, X, Z, ZX per qubit).
struct TransferTensor {
  int n = 1;
  std::vector<Complex> entries;  // size 4^n, flat row-major

  TransferTensor() : entries(4, Complex(0.0)) {}
  TransferTensor(int rank, std::vector<Complex> e) : n(rank), entries(std::move(e)) {
    detail::check_rank(n);
    if (entries.size() != detail::pow4(n))
      throw Error("tensor entry count does not match rank");
  }
};

/// T = M·η applied per index.
inline TransferTensor m_forward(const UnitarySupplement& eta) {
  TransferTensor t(eta.n, eta.entries);
  for (int k = 1; k <= t.n; ++k) detail::apply_axis(t.entries, t.n, k, m_matrix());
  return t;
}

/// η = M⁻¹·T applied per index.
inline UnitarySupplement m_backward(const TransferTensor& t) {
  UnitarySupplement eta(t.n, t.entries);
  for (int k = 1; k <= eta.n; ++k)
    detail::apply_axis(eta.entries, eta.n, k, m_inverse_matrix());
  return eta;
}

/// First column of the reconstructed 2ⁿ×2ⁿ matrix, i.e. η|0…0⟩: the
/// canonical digit per qubit is 2·(row bit), qubit 1 most significant.
inline std::vector<Complex> vector_supplement(const UnitarySupplement& eta) {
  const std::size_t dim = std::size_t{1} << eta.n;
  std::vector<Complex> v(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t idx = 0;
    for (int k = 0; k < eta.n; ++k) {
      const std::size_t bit = (r >> (eta.n - 1 - k)) & 1u;
      idx = idx * 4 + 2 * bit;
    }
    v[r] = eta.entries[idx];
  }
  return v;
}

/// Index group: i∘j keeps the capital (Z) part of i and the lower (X)
/// part of j.  Closed form (i & 2) | (j & 1); Table "IndexGroup" is the
/// unit-test fixture, not the source of truth.
inline int circ(int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 3) throw Error("circ indices must be in 0..3");
  return (i & 2) | (j & 1);
}

/// Positionwise ∘ on flat multi-indices.
inline std::size_t circ_multi(std::size_t i, std::size_t j, int n) {
  std::size_t out = 0;
  for (int k = n - 1; k >= 0; --k) {
    const int di = int((i >> (2 * k)) & 3u);
    const int dj = int((j >> (2 * k)) & 3u);
    out |= std::size_t(circ(di, dj)) << (2 * k);
  }
  return out;
}

/// Slice-proportionality symmetry test: for each qubit position, the two
/// sub-tensors selected by the lower bit of that position's digit must be
/// proportional (relative tolerance; zero slices are proportional to
/// anything).  Equivalent to T_i·T_j = T_{i∘j}·T_{j∘i} for all index pairs
/// and position subsets.
inline bool check_symmetry(const TransferTensor& t, double tol = 1e-10) {
  const std::size_t size = t.entries.size();
  for (int k = 1; k <= t.n; ++k) {
    const std::size_t stride = detail::pow4(t.n - k);
    // Pair entries whose digit at position k differs only in the lower bit.
    std::vector<std::pair<Complex, Complex>> pairs;
    pairs.reserve(size / 2);
    for (std::size_t idx = 0; idx < size; ++idx) {
      const std::size_t digit = (idx / stride) & 3u;
      if (digit & 1u) continue;  // lower bit set: partner of idx - stride
      pairs.emplace_back(t.entries[idx], t.entries[idx + stride]);
    }
    double scale = 0.0;
    std::size_t pivot = 0;
    double pivot_mag = -1.0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const double mag = std::abs(pairs[p].first) + std::abs(pairs[p].second);
      scale = std::max({scale, std::abs(pairs[p].first), std::abs(pairs[p].second)});
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot = p;
      }
    }
    if (scale == 0.0) continue;  // all-zero tensor: trivially proportional
    const auto [u0, v0] = pairs[pivot];
    for (const auto& [u, v] : pairs) {
      const Complex cross = u * v0 - v * u0;
      if (std::abs(cross) > tol * pivot_mag * scale) return false;
    }
  }
  return true;
}

/// Linear map on transfer tensors: factorized per-qubit 4×4 blocks when
/// possible, dense 4ⁿ×4ⁿ otherwise.  May be singular (S^f is).
struct GaugeTensor {
  // Exactly one representation is active.
  std::vector<Mat4> per_qubit;   // size n when factorized
  std::vector<Complex> dense;    // size 4^n·4^n when dense
  int n = 0;

  static GaugeTensor identity(int rank) {
    GaugeTensor g;
    g.n = rank;
    Mat4 id{};
    for (int i = 0; i < 4; ++i) id[std::size_t(i * 4 + i)] = Complex(1.0);
    g.per_qubit.assign(std::size_t(rank), id);
    return g;
  }

  static GaugeTensor factorized(std::vector<Mat4> factors) {
    GaugeTensor g;
    g.n = int(factors.size());
    detail::check_rank(g.n);
    g.per_qubit = std::move(factors);
    return g;
  }

  static GaugeTensor dense_map(int rank, std::vector<Complex> matrix) {
    detail::check_rank(rank);
    if (rank > 5) throw Error("dense gauge maps limited to rank 5");
    GaugeTensor g;
    g.n = rank;
    const std::size_t dim = detail::pow4(rank);
    if (matrix.size() != dim * dim)
      throw Error("dense gauge matrix size does not match rank");
    g.dense = std::move(matrix);
    return g;
  }
};

/// The printed fully symmetric single-qubit block
/// S^f = ½[[1,1,1,−1],[1,1,1,−1],[1,−1,1,1],[1,−1,1,1]].
inline const Mat4& fully_symmetric_block() {
  static const Mat4 s = {
      Complex(0.5), Complex(0.5),  Complex(0.5), Complex(-0.5),
      Complex(0.5), Complex(0.5),  Complex(0.5), Complex(-0.5),
      Complex(0.5), Complex(-0.5), Complex(0.5), Complex(0.5),
      Complex(0.5), Complex(-0.5), Complex(0.5), Complex(0.5)};
  return s;
}

/// T′ = S·T with the gauge constraint enforced: the vector supplement of
/// m_backward(T′) must equal that of m_backward(T) within `tol`, else the
/// gauge is rejected with a max-deviation report.
inline TransferTensor apply_gauge(const GaugeTensor& s, const TransferTensor& t,
                                  double tol = 1e-12) {
  if (s.n != t.n) throw Error("gauge rank does not match tensor rank");
  TransferTensor out(t.n, t.entries);
  if (!s.per_qubit.empty()) {
    for (int k = 1; k <= t.n; ++k)
      detail::apply_axis(out.entries, t.n, k, s.per_qubit[std::size_t(k - 1)]);
  } else {
    const std::size_t dim = detail::pow4(t.n);
    std::vector<Complex> res(dim, Complex(0.0));
    for (std::size_t r = 0; r < dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += s.dense[r * dim + c] * t.entries[c];
      res[r] = acc;
    }
    out.entries = std::move(res);
  }
  const auto before = vector_supplement(m_backward(t));
  const auto after = vector_supplement(m_backward(out));
  double max_dev = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(before[i] - after[i]));
    scale = std::max({scale, std::abs(before[i]), 1.0});
  }
  if (max_dev > tol * scale)
    throw Error("gauge violates the vector-supplement constraint (max deviation " +
                detail::format_double(max_dev) + ")");
  return out;
}

/// Per-qubit application of S^f; the output has, per qubit position, both
/// lower-bit slices equal ("all matrix-format columns equal"), hence passes
/// check_symmetry.
inline TransferTensor apply_fully_symmetric(const TransferTensor& t) {
  GaugeTensor g;
  g.n = t.n;
  g.per_qubit.assign(std::size_t(t.n), fully_symmetric_block());
  return apply_gauge(g, t);
}

/// Single-qubit supplement-preserving shift family:
/// (T00, T01, T10, T11) → (T00+γ, T01+γ′, T10−γ, T11+γ′).
inline TransferTensor gauge_shift(const TransferTensor& t, Complex gamma,
                                  Complex gamma_prime) {
  if (t.n != 1) throw Error("gauge_shift acts on single-qubit tensors");
  TransferTensor out = t;
  out.entries[0] += gamma;
  out.entries[1] += gamma_prime;
  out.entries[2] -= gamma;
  out.entries[3] += gamma_prime;
  return out;
}

/// The (γ, γ′) values that symmetrize a single-qubit tensor:
/// γ = ½(T01 + T10 − T00 − T11), γ′ = ½(T00 + T10 − T01 − T11).
inline std::pair<Complex, Complex> symmetrizing_shift(const TransferTensor& t) {
  if (t.n != 1) throw Error("symmetrizing_shift acts on single-qubit tensors");
  const Complex g = 0.5 * (t.entries[1] + t.entries[2] - t.entries[0] - t.entries[3]);
  const Complex gp = 0.5 * (t.entries[0] + t.entries[2] - t.entries[1] - t.entries[3]);
  return {g, gp};
}

}  // namespace mbqc

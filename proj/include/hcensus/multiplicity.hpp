#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hcensus/types.hpp"

namespace hcensus {

// ---------------------------------------------------------------------------
// Directed three-vertex classes T0..T15.
//
//   T0 empty          T4 in-star          T8  cyclic triangle    T12 recip + out-star
//   T1 single arc     T5 out-star         T9  transitive         T13 recip + flow
//   T2 recip pair     T6 recip + out arc  T10 two recip pairs    T14 two recip + single
//   T3 2-path         T7 recip + in arc   T11 recip + in-star    T15 complete recip
//
// Directed triangles D0..D6 are the subset with every pair connected.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kTriadClasses = 16;
inline constexpr std::size_t kTriangleClasses = 7;
inline constexpr std::size_t kQuadClasses = 11;

/// T-class index of each D-class.
inline constexpr std::array<int, kTriangleClasses> kTriangleToTriad = {8, 9, 13, 11, 12, 14, 15};

/// D-class of each T-class, -1 where some pair is unconnected.
inline constexpr std::array<int, kTriadClasses> kTriadToTriangle = {
    -1, -1, -1, -1, -1, -1, -1, -1, 0, 1, -1, 3, 4, 2, 5, 6};

/// Row i, column j: non-induced copies of T_i inside T_j.
inline constexpr std::array<std::array<int, 16>, 16> kTriadMatrix = {{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 6},
    {0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 2, 1, 1, 1, 2, 3},
    {0, 0, 0, 1, 0, 0, 1, 1, 3, 1, 2, 2, 2, 3, 4, 6},
    {0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 1, 2, 1, 2, 3},
    {0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 2, 1, 1, 2, 3},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 0, 1, 3, 6},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 0, 2, 1, 3, 6},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 1, 3, 6},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 6},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
}};

/// Q0 empty, Q1 edge, Q2 2-path, Q3 two disjoint edges, Q4 claw,
/// Q5 triangle, Q6 3-path, Q7 paw, Q8 4-cycle, Q9 diamond, Q10 K4.
inline constexpr std::array<std::array<int, 11>, 11> kQuadMatrix = {{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 2, 2, 3, 3, 3, 4, 4, 5, 6},
    {0, 0, 1, 0, 3, 3, 2, 5, 4, 8, 12},
    {0, 0, 0, 1, 0, 0, 1, 1, 2, 2, 3},
    {0, 0, 0, 0, 1, 0, 0, 1, 0, 2, 4},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 4},
    {0, 0, 0, 0, 0, 0, 1, 2, 4, 6, 12},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 4, 12},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 6},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
}};

namespace detail {

// Arc bit layout on vertices {0,1,2}: bit (2*a + (b>a?b-1:b)) is the arc a->b.
constexpr int triad_arc_bit(int a, int b) { return 2 * a + (b > a ? b - 1 : b); }

constexpr int permute_triad(int code, const std::array<int, 3>& p) {
  int out = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b && (code >> triad_arc_bit(a, b) & 1)) out |= 1 << triad_arc_bit(p[a], p[b]);
    }
  }
  return out;
}

constexpr int canonical_triad(int code) {
  std::array<int, 3> p = {0, 1, 2};
  int best = code;
  do {
    best = std::min(best, permute_triad(code, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

constexpr int triad_code(std::initializer_list<std::pair<int, int>> arcs) {
  int code = 0;
  for (auto [a, b] : arcs) code |= 1 << triad_arc_bit(a, b);
  return code;
}

// Representatives, one per class, in class order.
inline constexpr std::array<int, 16> kTriadRepresentatives = {
    triad_code({}),
    triad_code({{0, 1}}),
    triad_code({{0, 1}, {1, 0}}),
    triad_code({{0, 1}, {1, 2}}),
    triad_code({{0, 2}, {1, 2}}),
    triad_code({{0, 1}, {0, 2}}),
    triad_code({{0, 1}, {1, 0}, {0, 2}}),
    triad_code({{0, 1}, {1, 0}, {2, 0}}),
    triad_code({{0, 1}, {1, 2}, {2, 0}}),
    triad_code({{0, 1}, {1, 2}, {0, 2}}),
    triad_code({{0, 1}, {1, 0}, {1, 2}, {2, 1}}),
    triad_code({{0, 1}, {1, 0}, {0, 2}, {1, 2}}),
    triad_code({{0, 1}, {1, 0}, {2, 0}, {2, 1}}),
    triad_code({{0, 1}, {1, 0}, {1, 2}, {2, 0}}),
    triad_code({{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}}),
    triad_code({{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}),
};

constexpr std::array<std::int8_t, 64> make_triad_table() {
  std::array<std::int8_t, 64> table{};
  for (int code = 0; code < 64; ++code) {
    const int canon = canonical_triad(code);
    table[code] = -1;
    for (int k = 0; k < 16; ++k) {
      if (canonical_triad(kTriadRepresentatives[k]) == canon) table[code] = static_cast<std::int8_t>(k);
    }
  }
  return table;
}

inline constexpr std::array<std::int8_t, 64> kTriadTable = make_triad_table();

}  // namespace detail

/// Isomorphism class of the triad (a,b,c) given the three pair states
/// (a,b), (b,c), (c,a).
constexpr int classify_triple(PairState ab, PairState bc, PairState ca) {
  using detail::triad_arc_bit;
  int code = 0;
  if (has_forward(ab)) code |= 1 << triad_arc_bit(0, 1);
  if (has_reverse(ab)) code |= 1 << triad_arc_bit(1, 0);
  if (has_forward(bc)) code |= 1 << triad_arc_bit(1, 2);
  if (has_reverse(bc)) code |= 1 << triad_arc_bit(2, 1);
  if (has_forward(ca)) code |= 1 << triad_arc_bit(2, 0);
  if (has_reverse(ca)) code |= 1 << triad_arc_bit(0, 2);
  return detail::kTriadTable[code];
}

/// D-class of a fully connected triad, or nullopt.
constexpr std::optional<int> classify_triangle(PairState ab, PairState bc, PairState ca) {
  const int d = kTriadToTriangle[classify_triple(ab, bc, ca)];
  if (d < 0) return std::nullopt;
  return d;
}

namespace detail {

// Pair bit layout on vertices {0,1,2,3}: 01,02,03,12,13,23.
constexpr int quad_pair_bit(int a, int b) {
  if (a > b) std::swap(a, b);
  constexpr std::array<std::array<int, 4>, 4> bits = {{
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}}};
  return bits[a][b];
}

struct QuadInvariant {
  int edges = 0;
  std::array<int, 4> degrees{};  // sorted ascending
  int triangles = 0;

  constexpr bool operator==(const QuadInvariant&) const = default;
};

constexpr QuadInvariant quad_invariant(int code) {
  QuadInvariant inv;
  auto edge = [&](int a, int b) { return (code >> quad_pair_bit(a, b) & 1) != 0; };
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (!edge(a, b)) continue;
      ++inv.edges;
      ++inv.degrees[a];
      ++inv.degrees[b];
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = b + 1; c < 4; ++c) {
        if (edge(a, b) && edge(b, c) && edge(a, c)) ++inv.triangles;
      }
    }
  }
  std::sort(inv.degrees.begin(), inv.degrees.end());
  return inv;
}

constexpr int quad_code(std::initializer_list<std::pair<int, int>> edges) {
  int code = 0;
  for (auto [a, b] : edges) code |= 1 << quad_pair_bit(a, b);
  return code;
}

inline constexpr std::array<int, 11> kQuadRepresentatives = {
    quad_code({}),
    quad_code({{0, 1}}),
    quad_code({{0, 1}, {1, 2}}),
    quad_code({{0, 1}, {2, 3}}),
    quad_code({{0, 1}, {0, 2}, {0, 3}}),
    quad_code({{0, 1}, {1, 2}, {0, 2}}),
    quad_code({{0, 1}, {1, 2}, {2, 3}}),
    quad_code({{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
    quad_code({{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
    quad_code({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
    quad_code({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
};

constexpr std::array<std::int8_t, 64> make_quad_table() {
  std::array<std::int8_t, 64> table{};
  for (int code = 0; code < 64; ++code) {
    table[code] = -1;
    for (int k = 0; k < 11; ++k) {
      if (quad_invariant(kQuadRepresentatives[k]) == quad_invariant(code)) {
        table[code] = static_cast<std::int8_t>(k);
      }
    }
  }
  return table;
}

inline constexpr std::array<std::int8_t, 64> kQuadTable = make_quad_table();

}  // namespace detail

/// Q-class of a four-vertex graph from its six pair bits, laid out as
/// 01,02,03,12,13,23 (bit 0 = pair 01).
constexpr int classify_quad(unsigned pair_bits) { return detail::kQuadTable[pair_bits & 63U]; }

// ---------------------------------------------------------------------------
// Unit upper-triangular back substitution.
// ---------------------------------------------------------------------------

/// Solves M x = rhs for a unit upper-triangular M of fixed size.
template <std::size_t K>
constexpr std::array<Count, K> solve_unit_upper_triangular(
    const std::array<std::array<int, K>, K>& m, const std::array<Count, K>& rhs) {
  std::array<Count, K> x{};
  for (std::size_t i = K; i-- > 0;) {
    Count acc = rhs[i];
    for (std::size_t j = i + 1; j < K; ++j) acc -= static_cast<Count>(m[i][j]) * x[j];
    x[i] = acc;
  }
  return x;
}

/// Runtime-shaped variant; validates shape and unit upper-triangularity.
inline std::vector<Count> solve_unit_upper_triangular(
    const std::vector<std::vector<std::int64_t>>& m, std::span<const Count> rhs) {
  const std::size_t k = m.size();
  if (rhs.size() != k) throw Error(ErrorCode::DimensionMismatch, "rhs length differs from matrix order");
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i].size() != k) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    if (m[i][i] != 1) throw Error(ErrorCode::DimensionMismatch, "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != 0) throw Error(ErrorCode::DimensionMismatch, "matrix is not upper triangular");
    }
  }
  std::vector<Count> x(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    Count acc = rhs[i];
    for (std::size_t j = i + 1; j < k; ++j) acc -= static_cast<Count>(m[i][j]) * x[j];
    x[i] = acc;
  }
  return x;
}

template <std::size_t K>
constexpr std::array<Count, K> multiply(const std::array<std::array<int, K>, K>& m,
                                        const std::array<Count, K>& x) {
  std::array<Count, K> y{};
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = 0; j < K; ++j) y[i] += static_cast<Count>(m[i][j]) * x[j];
  }
  return y;
}

template <std::size_t K>
std::vector<std::vector<std::int64_t>> to_rows(const std::array<std::array<int, K>, K>& m) {
  std::vector<std::vector<std::int64_t>> rows(K, std::vector<std::int64_t>(K));
  for (std::size_t i = 0; i < K; ++i) std::copy(m[i].begin(), m[i].end(), rows[i].begin());
  return rows;
}

static_assert(classify_triple(PairState::None, PairState::None, PairState::None) == 0);
static_assert(classify_triple(PairState::Recip, PairState::Recip, PairState::Recip) == 15);
static_assert(classify_triple(PairState::Fwd, PairState::Fwd, PairState::None) == 3);
static_assert(classify_quad(0) == 0 && classify_quad(63) == 10);

}  // namespace hcensus

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include <absl/container/flat_hash_map.h>

#include "hcensus/multiplicity.hpp"
#include "hcensus/types.hpp"

namespace hcensus {

/// Elbow (i, l, j) with joint l, classified by the two leg states
/// A = state(i,l) and B = state(l,j):
///
///   e0: i->l, l->j    e3: i->l, j->l    e6: i->l, l<->j
///   e1: l->i, j->l    e4: i<->l, l->j   e7: l->i, l<->j
///   e2: l->i, l->j    e5: i<->l, j->l   e8: i<->l, l<->j
inline constexpr std::size_t kElbowTypes = 9;

namespace detail {

// Indexed [A][B] with PairState values 1..3; row/column 0 unused.
inline constexpr std::array<std::array<std::int8_t, 4>, 4> kElbowType = {{
    {-1, -1, -1, -1},
    {-1, 0, 3, 6},
    {-1, 2, 1, 7},
    {-1, 4, 5, 8},
}};

struct Legs {
  PairState a;
  PairState b;
};

inline constexpr std::array<Legs, kElbowTypes> kElbowLegs = {{
    {PairState::Fwd, PairState::Fwd},
    {PairState::Rev, PairState::Rev},
    {PairState::Rev, PairState::Fwd},
    {PairState::Fwd, PairState::Rev},
    {PairState::Recip, PairState::Fwd},
    {PairState::Recip, PairState::Rev},
    {PairState::Fwd, PairState::Recip},
    {PairState::Rev, PairState::Recip},
    {PairState::Recip, PairState::Recip},
}};

// D-class of the triangle (i, j, l) for pair state (i,j) and elbow type k.
constexpr std::array<std::array<std::int8_t, kElbowTypes>, 4> make_elbow_triangle_table() {
  std::array<std::array<std::int8_t, kElbowTypes>, 4> table{};
  for (int s = 0; s < 4; ++s) {
    for (std::size_t k = 0; k < kElbowTypes; ++k) {
      if (s == 0) {
        table[s][k] = -1;
        continue;
      }
      const auto [a, b] = kElbowLegs[k];
      const int t = classify_triple(static_cast<PairState>(s), mirror(b), mirror(a));
      table[s][k] = static_cast<std::int8_t>(kTriadToTriangle[t]);
    }
  }
  return table;
}

inline constexpr auto kElbowTriangle = make_elbow_triangle_table();

}  // namespace detail

constexpr int elbow_type(PairState leg_a, PairState leg_b) {
  return detail::kElbowType[static_cast<int>(leg_a)][static_cast<int>(leg_b)];
}

/// Type of the same elbow read from the other endpoint.
constexpr int mirror_elbow(int type) {
  const auto [a, b] = detail::kElbowLegs[type];
  return elbow_type(mirror(b), mirror(a));
}

/// D-class formed when the pair (i,j) in state `pair` closes an elbow of
/// type `type`; -1 when the pair is unconnected.
constexpr int elbow_triangle(PairState pair, int type) {
  return detail::kElbowTriangle[static_cast<int>(pair)][type];
}

using ElbowCounts = std::array<std::int64_t, kElbowTypes>;

/// Ordered pair (i,j) -> counts of low-joint elbows by type. Both key orders
/// are stored; all-zero entries are dropped.
class ElbowStore {
 public:
  std::size_t size() const noexcept { return map_.size(); }

  const ElbowCounts* find(Vertex i, Vertex j) const {
    auto it = map_.find(detail::ordered_key(i, j));
    return it == map_.end() ? nullptr : &it->second;
  }

  ElbowCounts get(Vertex i, Vertex j) const {
    const auto* e = find(i, j);
    return e ? *e : ElbowCounts{};
  }

  /// Adds one elbow i - l - j (legs A = state(i,l), B = state(l,j)) under
  /// both key orders.
  void add_elbow(Vertex i, Vertex j, PairState leg_a, PairState leg_b, int sign) {
    const int type = elbow_type(leg_a, leg_b);
    bump(detail::ordered_key(i, j), type, sign);
    bump(detail::ordered_key(j, i), mirror_elbow(type), sign);
  }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [key, counts] : map_) {
      f(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffU), counts);
    }
  }

  friend bool operator==(const ElbowStore&, const ElbowStore&) = default;

 private:
  void bump(std::uint64_t key, int type, int sign) {
    auto [it, inserted] = map_.try_emplace(key);
    it->second[type] += sign;
    if (sign < 0) {
      bool empty = true;
      for (auto c : it->second) empty = empty && c == 0;
      if (empty) map_.erase(it);
    }
  }

  absl::flat_hash_map<std::uint64_t, ElbowCounts, detail::MixHash> map_;
};

}  // namespace hcensus

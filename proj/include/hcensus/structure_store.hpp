#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>

#include <absl/container/flat_hash_map.h>

#include "hcensus/types.hpp"

namespace hcensus {

/// Sorted vertex triple.
struct TripleKey {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  static TripleKey of(Vertex x, Vertex y, Vertex z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
  }

  friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleKeyHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    return static_cast<std::size_t>(
        detail::mix64(detail::mix64(detail::ordered_key(k.a, k.b)) ^ k.c));
  }
};

/// Partial four-vertex structures whose interior vertices are all Low.
///
///   s0[u]      paths u-a-b, b != u
///   s1[u]      the s0 paths that close with b-u
///   s2[u,v]    a adjacent to u and v
///   s3[u,v]    paths u-a-b-v
///   s4[u,v]    ordered (a,b): a adjacent to u, v and b; b not in {u,v}
///   s5[u,v]    s4 configurations weighted by |{x in {u,v} : b-x}|
///   s6[u,v]    unordered {a,b}, both adjacent to u and v, a-b
///   s7[u,v,w]  a adjacent to u, v and w
///
/// a and b always range over Low vertices. Zero entries are not stored.
class StructureStore {
 public:
  enum Vertex1 : std::uint8_t { S0, S1 };
  enum Pair : std::uint8_t { S2, S3, S4, S5, S6 };

  using VertexEntry = std::array<std::int64_t, 2>;
  using PairEntry = std::array<std::int64_t, 5>;

  std::int64_t s0(Vertex u) const { return get(p1_, u, S0); }
  std::int64_t s1(Vertex u) const { return get(p1_, u, S1); }
  std::int64_t s2(Vertex u, Vertex v) const { return pair(u, v, S2); }
  std::int64_t s3(Vertex u, Vertex v) const { return pair(u, v, S3); }
  std::int64_t s4(Vertex u, Vertex v) const { return pair(u, v, S4); }
  std::int64_t s5(Vertex u, Vertex v) const { return pair(u, v, S5); }
  std::int64_t s6(Vertex u, Vertex v) const { return pair(u, v, S6); }

  std::int64_t s7(Vertex u, Vertex v, Vertex w) const {
    auto it = p3_.find(TripleKey::of(u, v, w));
    return it == p3_.end() ? 0 : it->second;
  }

  PairEntry pair_entry(Vertex u, Vertex v) const {
    auto it = p2_.find(detail::unordered_key(u, v));
    return it == p2_.end() ? PairEntry{} : it->second;
  }

  void add(Vertex1 which, Vertex u, std::int64_t delta) { bump(p1_, u, which, delta); }

  void add(Pair which, Vertex u, Vertex v, std::int64_t delta) {
    bump(p2_, detail::unordered_key(u, v), which, delta);
  }

  void add_s7(Vertex u, Vertex v, Vertex w, std::int64_t delta) {
    if (delta == 0) return;
    auto [it, inserted] = p3_.try_emplace(TripleKey::of(u, v, w), 0);
    it->second += delta;
    if (it->second == 0) p3_.erase(it);
  }

  std::size_t vertex_entries() const noexcept { return p1_.size(); }
  std::size_t pair_entries() const noexcept { return p2_.size(); }
  std::size_t triple_entries() const noexcept { return p3_.size(); }
  std::size_t size() const noexcept { return p1_.size() + p2_.size() + p3_.size(); }

  const auto& vertex_map() const noexcept { return p1_; }
  const auto& pair_map() const noexcept { return p2_; }
  const auto& triple_map() const noexcept { return p3_; }

  friend bool operator==(const StructureStore&, const StructureStore&) = default;

 private:
  template <class Map, class Key>
  static std::int64_t get(const Map& map, const Key& key, std::size_t slot) {
    auto it = map.find(key);
    return it == map.end() ? 0 : it->second[slot];
  }

  std::int64_t pair(Vertex u, Vertex v, std::size_t slot) const {
    return get(p2_, detail::unordered_key(u, v), slot);
  }

  template <class Map, class Key>
  static void bump(Map& map, const Key& key, std::size_t slot, std::int64_t delta) {
    if (delta == 0) return;
    auto [it, inserted] = map.try_emplace(key);
    it->second[slot] += delta;
    if (std::all_of(it->second.begin(), it->second.end(), [](std::int64_t c) { return c == 0; })) {
      map.erase(it);
    }
  }

  absl::flat_hash_map<Vertex, VertexEntry, detail::MixHash> p1_;
  absl::flat_hash_map<std::uint64_t, PairEntry, detail::MixHash> p2_;
  absl::flat_hash_map<TripleKey, std::int64_t, TripleKeyHash> p3_;
};

}  // namespace hcensus

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "hcensus/types.hpp"

namespace hcensus {

/// Strict neighbor counts of a vertex: in-only, out-only and reciprocal.
struct VertexStats {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t recip = 0;

  std::size_t degree() const noexcept { return in + out + recip; }
  std::size_t indegree() const noexcept { return in + recip; }
  std::size_t outdegree() const noexcept { return out + recip; }

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

struct EdgeTransition {
  Vertex u = 0;
  Vertex v = 0;
  PairState before = PairState::None;
  PairState after = PairState::None;
};

enum class Relation : std::uint8_t { In, Out, Recip };

/// Simple directed graph with O(1) expected pair-state lookup.
///
/// External ids are mapped to dense indices so per-vertex data lives in flat
/// arrays. Undirected graphs are stored as reciprocal pairs.
class DynamicGraph {
 public:
  DynamicGraph() = default;

  std::size_t vertex_count() const noexcept { return live_count_; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  std::size_t reciprocal_pairs() const noexcept { return recip_pairs_; }
  /// Number of adjacent vertex pairs (the undirected edge count).
  std::size_t adjacent_pairs() const noexcept { return arc_count_ - recip_pairs_; }

  /// One past the largest dense index ever handed out.
  std::size_t capacity() const noexcept { return ids_.size(); }

  bool contains(VertexId id) const { return index_.contains(id); }

  std::optional<Vertex> find(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex index_of(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(id.value));
    }
    return it->second;
  }

  VertexId id_of(Vertex v) const { return ids_[v]; }
  bool is_live(Vertex v) const noexcept { return v < live_.size() && live_[v]; }

  Vertex add_vertex(VertexId id) {
    if (index_.contains(id)) {
      throw Error(ErrorCode::DuplicateVertex, "vertex " + std::to_string(id.value));
    }
    Vertex v;
    if (!free_.empty()) {
      v = free_.back();
      free_.pop_back();
      ids_[v] = id;
      live_[v] = 1;
    } else {
      v = static_cast<Vertex>(ids_.size());
      ids_.push_back(id);
      live_.push_back(1);
      stats_.emplace_back();
      adj_.emplace_back();
    }
    index_.emplace(id, v);
    ++live_count_;
    return v;
  }

  void remove_vertex(VertexId id) {
    const Vertex v = index_of(id);
    if (!adj_[v].empty()) {
      throw Error(ErrorCode::NotIsolated, "vertex " + std::to_string(id.value));
    }
    index_.erase(id);
    live_[v] = 0;
    stats_[v] = {};
    free_.push_back(v);
    --live_count_;
  }

  PairState pair_state(Vertex u, Vertex v) const {
    auto it = pairs_.find(detail::ordered_key(u, v));
    return it == pairs_.end() ? PairState::None : it->second.state;
  }

  PairState pair_state(VertexId u, VertexId v) const {
    auto iu = find(u);
    auto iv = find(v);
    if (!iu || !iv) return PairState::None;
    return pair_state(*iu, *iv);
  }

  bool adjacent(Vertex u, Vertex v) const { return pairs_.contains(detail::ordered_key(u, v)); }
  bool has_arc(Vertex u, Vertex v) const { return has_forward(pair_state(u, v)); }

  const VertexStats& stats(Vertex v) const { return stats_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  /// Adjacent vertices of v, in no particular order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  Relation relation(Vertex u, Vertex w) const {
    switch (pair_state(u, w)) {
      case PairState::Fwd: return Relation::Out;
      case PairState::Rev: return Relation::In;
      default: return Relation::Recip;
    }
  }

  EdgeTransition insert_arc(Vertex u, Vertex v) {
    check_pair(u, v);
    const PairState before = pair_state(u, v);
    if (has_forward(before)) {
      throw Error(ErrorCode::DuplicateArc, describe(u, v));
    }
    const PairState after = before == PairState::None ? PairState::Fwd : PairState::Recip;
    set_state(u, v, before, after);
    ++arc_count_;
    return {u, v, before, after};
  }

  EdgeTransition delete_arc(Vertex u, Vertex v) {
    check_pair(u, v);
    const PairState before = pair_state(u, v);
    if (!has_forward(before)) {
      throw Error(ErrorCode::MissingArc, describe(u, v));
    }
    const PairState after = before == PairState::Fwd ? PairState::None : PairState::Rev;
    set_state(u, v, before, after);
    --arc_count_;
    return {u, v, before, after};
  }

  /// Undirected view: an edge is a reciprocal pair.
  EdgeTransition insert_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    const PairState before = pair_state(u, v);
    if (before != PairState::None) {
      throw Error(ErrorCode::DuplicateEdge, describe(u, v));
    }
    set_state(u, v, before, PairState::Recip);
    arc_count_ += 2;
    return {u, v, before, PairState::Recip};
  }

  EdgeTransition delete_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    const PairState before = pair_state(u, v);
    if (before != PairState::Recip) {
      throw Error(ErrorCode::MissingEdge, describe(u, v));
    }
    set_state(u, v, before, PairState::None);
    arc_count_ -= 2;
    return {u, v, before, PairState::None};
  }

  EdgeTransition insert_arc(VertexId u, VertexId v) { return insert_arc(index_of(u), index_of(v)); }
  EdgeTransition delete_arc(VertexId u, VertexId v) { return delete_arc(index_of(u), index_of(v)); }

  std::vector<Vertex> live_vertices() const {
    std::vector<Vertex> out;
    out.reserve(live_count_);
    for (Vertex v = 0; v < live_.size(); ++v) {
      if (live_[v]) out.push_back(v);
    }
    return out;
  }

  /// Semantic equality: same live ids, same pair states. Neighbor order and
  /// dense index assignment are ignored.
  friend bool operator==(const DynamicGraph& a, const DynamicGraph& b) {
    if (a.live_count_ != b.live_count_ || a.arc_count_ != b.arc_count_ ||
        a.recip_pairs_ != b.recip_pairs_ || a.pairs_.size() != b.pairs_.size()) {
      return false;
    }
    for (const auto& [id, v] : a.index_) {
      auto it = b.index_.find(id);
      if (it == b.index_.end() || a.stats_[v] != b.stats_[it->second]) return false;
    }
    for (const auto& [key, slot] : a.pairs_) {
      const auto u = static_cast<Vertex>(key >> 32);
      const auto w = static_cast<Vertex>(key & 0xffffffffU);
      if (b.pair_state(b.index_of(a.ids_[u]), b.index_of(a.ids_[w])) != slot.state) return false;
    }
    return true;
  }

 private:
  struct Slot {
    PairState state;
    std::uint32_t pos;  // position of the second vertex in adj_[first]
  };

  void check_pair(Vertex u, Vertex v) const {
    if (!is_live(u) || !is_live(v)) {
      throw Error(ErrorCode::UnknownVertex, "dense index " + std::to_string(is_live(u) ? v : u));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, describe(u, v));
  }

  std::string describe(Vertex u, Vertex v) const {
    return "(" + std::to_string(ids_[u].value) + "," + std::to_string(ids_[v].value) + ")";
  }

  static std::size_t* slot_for(VertexStats& s, PairState state) {
    switch (state) {
      case PairState::Fwd: return &s.out;
      case PairState::Rev: return &s.in;
      case PairState::Recip: return &s.recip;
      case PairState::None: break;
    }
    return nullptr;
  }

  static void tally(VertexStats& s, PairState state, int sign) {
    if (auto* field = slot_for(s, state)) {
      if (sign > 0) ++*field; else --*field;
    }
  }

  void set_state(Vertex u, Vertex v, PairState before, PairState after) {
    tally(stats_[u], before, -1);
    tally(stats_[v], mirror(before), -1);
    tally(stats_[u], after, +1);
    tally(stats_[v], mirror(after), +1);
    if (before == PairState::Recip) --recip_pairs_;
    if (after == PairState::Recip) ++recip_pairs_;

    if (before == PairState::None) {
      pairs_.emplace(detail::ordered_key(u, v), Slot{after, static_cast<std::uint32_t>(adj_[u].size())});
      pairs_.emplace(detail::ordered_key(v, u), Slot{mirror(after), static_cast<std::uint32_t>(adj_[v].size())});
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    } else if (after == PairState::None) {
      unlink(u, v);
      unlink(v, u);
    } else {
      pairs_.find(detail::ordered_key(u, v))->second.state = after;
      pairs_.find(detail::ordered_key(v, u))->second.state = mirror(after);
    }
  }

  // Removes v from adj_[u] by swap-with-last.
  void unlink(Vertex u, Vertex v) {
    auto it = pairs_.find(detail::ordered_key(u, v));
    const std::uint32_t pos = it->second.pos;
    pairs_.erase(it);
    auto& list = adj_[u];
    const Vertex last = list.back();
    list[pos] = last;
    list.pop_back();
    if (last != v) pairs_.find(detail::ordered_key(u, last))->second.pos = pos;
  }

  absl::flat_hash_map<VertexId, Vertex, std::hash<VertexId>> index_;
  std::vector<VertexId> ids_;
  std::vector<std::uint8_t> live_;
  std::vector<Vertex> free_;
  std::vector<VertexStats> stats_;
  std::vector<std::vector<Vertex>> adj_;
  absl::flat_hash_map<std::uint64_t, Slot, detail::MixHash> pairs_;
  std::size_t live_count_ = 0;
  std::size_t arc_count_ = 0;
  std::size_t recip_pairs_ = 0;
};

}  // namespace hcensus

#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <utility>

#include "hcensus/dynamic_graph.hpp"
#include "hcensus/elbow_store.hpp"
#include "hcensus/h_partition.hpp"
#include "hcensus/multiplicity.hpp"
#include "hcensus/types.hpp"

namespace hcensus {

using TriadVector = std::array<Count, kTriadClasses>;
using TriangleVector = std::array<Count, kTriangleClasses>;

/// Per-vertex sums behind the degree-based rows n3..n7 and n10.
struct DirectedAggregates {
  Count two_paths = 0;      // n3: sum indeg*outdeg - r
  Count in_pairs = 0;       // n4: sum C(indeg,2)
  Count out_pairs = 0;      // n5: sum C(outdeg,2)
  Count recip_out = 0;      // n6: sum r*(outdeg-1)
  Count recip_in = 0;       // n7: sum r*(indeg-1)
  Count recip_pairs_at = 0; // n10: sum C(r,2)

  static DirectedAggregates of(const VertexStats& s) {
    const Count in = static_cast<Count>(s.indegree());
    const Count out = static_cast<Count>(s.outdegree());
    const Count r = static_cast<Count>(s.recip);
    DirectedAggregates a;
    a.two_paths = in * out - r;
    a.in_pairs = choose2(in);
    a.out_pairs = choose2(out);
    a.recip_out = r == 0 ? 0 : r * (out - 1);
    a.recip_in = r == 0 ? 0 : r * (in - 1);
    a.recip_pairs_at = choose2(r);
    return a;
  }

  void add(const DirectedAggregates& o, int sign) {
    two_paths += sign * o.two_paths;
    in_pairs += sign * o.in_pairs;
    out_pairs += sign * o.out_pairs;
    recip_out += sign * o.recip_out;
    recip_in += sign * o.recip_in;
    recip_pairs_at += sign * o.recip_pairs_at;
  }

  friend bool operator==(const DirectedAggregates&, const DirectedAggregates&) = default;
};

/// Exact census of all 16 directed three-vertex subgraphs under arc
/// insertions and deletions.
///
/// Triangles closed by an arc are found through the elbow dictionary (low
/// joints) and a scan of the High set (high joints). Every other row of the
/// non-induced vector is a per-vertex degree function, so induced counts
/// come from one back substitution through the 16x16 multiplicity matrix.
template <PartitionPolicy Policy = HPartition>
class DirectedCensus {
 public:
  DirectedCensus() = default;
  explicit DirectedCensus(Policy policy) : policy_(std::move(policy)) {}

  const DynamicGraph& graph() const noexcept { return graph_; }
  const Policy& policy() const noexcept { return policy_; }
  const HighSet& high() const noexcept { return high_; }
  const ElbowStore& elbows() const noexcept { return elbows_; }
  const TriangleVector& triangles() const noexcept { return d_; }
  std::size_t h_index() const { return policy_.h_index(); }
  std::size_t partition_moves() const noexcept { return moves_; }

  Side side(VertexId id) const {
    return high_.contains(graph_.index_of(id)) ? Side::High : Side::Low;
  }

  Vertex add_vertex(VertexId id) {
    const Vertex v = graph_.add_vertex(id);
    process(policy_.on_vertex_added(v));
    return v;
  }

  /// Adds the vertex unless it already exists.
  Vertex ensure_vertex(VertexId id) {
    if (auto v = graph_.find(id)) return *v;
    return add_vertex(id);
  }

  void remove_vertex(VertexId id) {
    const Vertex v = graph_.index_of(id);
    if (graph_.degree(v) != 0) {
      throw Error(ErrorCode::NotIsolated, "vertex " + std::to_string(id.value));
    }
    process(policy_.on_vertex_removed(v));
    high_.erase(v);
    graph_.remove_vertex(id);
  }

  EdgeTransition insert_arc(VertexId u, VertexId v) {
    const Vertex iu = graph_.index_of(u);
    const Vertex iv = graph_.index_of(v);
    if (iu == iv) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u.value));
    const PairState before = graph_.pair_state(iu, iv);
    if (has_forward(before)) {
      throw Error(ErrorCode::DuplicateArc,
                  "(" + std::to_string(u.value) + "," + std::to_string(v.value) + ")");
    }
    return apply(iu, iv, before, before == PairState::None ? PairState::Fwd : PairState::Recip);
  }

  EdgeTransition delete_arc(VertexId u, VertexId v) {
    const Vertex iu = graph_.index_of(u);
    const Vertex iv = graph_.index_of(v);
    if (iu == iv) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u.value));
    const PairState before = graph_.pair_state(iu, iv);
    if (!has_forward(before)) {
      throw Error(ErrorCode::MissingArc,
                  "(" + std::to_string(u.value) + "," + std::to_string(v.value) + ")");
    }
    return apply(iu, iv, before, before == PairState::Fwd ? PairState::None : PairState::Rev);
  }

  /// Moves w across the partition and rebuilds the elbows it joins.
  /// Normally driven by the policy; exposed for tests.
  void on_partition_event(const PartitionEvent& ev) {
    const Vertex w = ev.vertex;
    const bool demote = ev.direction == PartitionEvent::Direction::Demote;
    if (demote) {
      if (!high_.contains(w)) return;
      high_.erase(w);
    } else if (high_.contains(w)) {
      return;
    }
    const int sign = demote ? +1 : -1;
    const auto nbrs = graph_.neighbors(w);
    for (std::size_t x = 0; x < nbrs.size(); ++x) {
      const PairState ax = graph_.pair_state(nbrs[x], w);
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        elbows_.add_elbow(nbrs[x], nbrs[y], ax, graph_.pair_state(w, nbrs[y]), sign);
      }
    }
    if (!demote) high_.insert(w);
    ++moves_;
  }

  /// n0..n15: non-induced copies of every triad class.
  TriadVector non_induced() const {
    const Count n = static_cast<Count>(graph_.vertex_count());
    const Count arcs = static_cast<Count>(graph_.arc_count());
    const Count recip = static_cast<Count>(graph_.reciprocal_pairs());
    const auto& d = d_;
    TriadVector out{};
    out[0] = choose3(n);
    out[1] = arcs * (n - 2);
    out[2] = recip * (n - 2);
    out[3] = agg_.two_paths;
    out[4] = agg_.in_pairs;
    out[5] = agg_.out_pairs;
    out[6] = agg_.recip_out;
    out[7] = agg_.recip_in;
    out[8] = d[0] + d[2] + d[5] + 2 * d[6];
    out[9] = d[1] + d[2] + 2 * d[3] + 2 * d[4] + 3 * d[5] + 6 * d[6];
    out[10] = agg_.recip_pairs_at;
    out[11] = d[3] + d[5] + 3 * d[6];
    out[12] = d[4] + d[5] + 3 * d[6];
    out[13] = d[2] + 2 * d[5] + 6 * d[6];
    out[14] = d[5] + 6 * d[6];
    out[15] = d[6];
    return out;
  }

  /// t0..t15: induced counts of every triad class.
  TriadVector induced_counts() const { return solve_unit_upper_triangular(kTriadMatrix, non_induced()); }

  friend bool operator==(const DirectedCensus& a, const DirectedCensus& b) {
    bool same = a.graph_ == b.graph_ && a.high_ == b.high_ && a.elbows_ == b.elbows_ &&
                a.d_ == b.d_ && a.agg_ == b.agg_;
    if constexpr (std::equality_comparable<Policy>) same = same && a.policy_ == b.policy_;
    return same;
  }

 private:
  EdgeTransition apply(Vertex u, Vertex v, PairState before, PairState after) {
    reclassify_triangles(u, v, before, after);

    const auto old_u = DirectedAggregates::of(graph_.stats(u));
    const auto old_v = DirectedAggregates::of(graph_.stats(v));
    const EdgeTransition tr = has_forward(after) && !has_forward(before) ? graph_.insert_arc(u, v)
                                                                          : graph_.delete_arc(u, v);
    agg_.add(old_u, -1);
    agg_.add(old_v, -1);
    agg_.add(DirectedAggregates::of(graph_.stats(u)), +1);
    agg_.add(DirectedAggregates::of(graph_.stats(v)), +1);

    maintain_elbows(u, v, before, after);

    if (before == PairState::None) {
      process(policy_.on_pair_degree_change(u, v, +1));
    } else if (after == PairState::None) {
      process(policy_.on_pair_degree_change(u, v, -1));
    }
    return tr;
  }

  // The pair (u,v) moves from `before` to `after`; every triangle through
  // the pair is re-filed. Neither the elbow entry for (u,v) nor the legs to
  // high joints depend on the pair itself, so this is order-independent.
  void reclassify_triangles(Vertex u, Vertex v, PairState before, PairState after) {
    auto shift = [&](int type, Count count) {
      if (before != PairState::None) d_[elbow_triangle(before, type)] -= count;
      if (after != PairState::None) d_[elbow_triangle(after, type)] += count;
    };
    if (const auto* e = elbows_.find(u, v)) {
      for (std::size_t k = 0; k < kElbowTypes; ++k) {
        if ((*e)[k] != 0) shift(static_cast<int>(k), (*e)[k]);
      }
    }
    for (Vertex w : high_.members()) {
      if (w == u || w == v) continue;
      const PairState a = graph_.pair_state(u, w);
      if (a == PairState::None) continue;
      const PairState b = graph_.pair_state(w, v);
      if (b == PairState::None) continue;
      shift(elbow_type(a, b), 1);
    }
  }

  // Elbows whose leg is the pair {u,v}: joint u or v, when that joint is low.
  void maintain_elbows(Vertex u, Vertex v, PairState before, PairState after) {
    auto at_joint = [&](Vertex x, Vertex y, PairState xy_before, PairState xy_after) {
      if (high_.contains(x)) return;
      for (Vertex w : graph_.neighbors(x)) {
        if (w == y) continue;
        const PairState wx = graph_.pair_state(w, x);
        if (xy_before != PairState::None) elbows_.add_elbow(w, y, wx, xy_before, -1);
        if (xy_after != PairState::None) elbows_.add_elbow(w, y, wx, xy_after, +1);
      }
    };
    at_joint(u, v, before, after);
    at_joint(v, u, mirror(before), mirror(after));
  }

  void process(const PartitionEvents& events) {
    for (const auto& ev : events) on_partition_event(ev);
  }

  DynamicGraph graph_;
  Policy policy_;
  HighSet high_;
  ElbowStore elbows_;
  TriangleVector d_{};
  DirectedAggregates agg_;
  std::size_t moves_ = 0;
};

}  // namespace hcensus

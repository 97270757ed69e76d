#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hcensus/dynamic_graph.hpp"
#include "hcensus/h_partition.hpp"
#include "hcensus/multiplicity.hpp"
#include "hcensus/structure_store.hpp"
#include "hcensus/types.hpp"

namespace hcensus {

using QuadVector = std::array<Count, kQuadClasses>;

/// Exact census of all 11 undirected four-vertex subgraphs under edge
/// insertions and deletions.
///
/// Stored: m3, m4, m6..m10, the edge count, the number of 2-paths and the
/// number of triangles. m0, m1, m2 and m5 scale with n and are derived when
/// asked for.
template <PartitionPolicy Policy = HPartition>
class QuadCensus {
 public:
  QuadCensus() = default;
  explicit QuadCensus(Policy policy) : policy_(std::move(policy)) {}

  const DynamicGraph& graph() const noexcept { return graph_; }
  const Policy& policy() const noexcept { return policy_; }
  const HighSet& high() const noexcept { return high_; }
  const StructureStore& structures() const noexcept { return store_; }
  std::size_t h_index() const { return policy_.h_index(); }
  std::size_t partition_moves() const noexcept { return moves_; }
  std::size_t edge_count() const noexcept { return graph_.adjacent_pairs(); }
  Count triangles() const noexcept { return triangles_; }
  Count two_paths() const noexcept { return two_paths_; }

  Side side(VertexId id) const {
    return high_.contains(graph_.index_of(id)) ? Side::High : Side::Low;
  }

  Vertex add_vertex(VertexId id) {
    const Vertex v = graph_.add_vertex(id);
    process(policy_.on_vertex_added(v));
    return v;
  }

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

  void insert_edge(VertexId a, VertexId b) {
    const Vertex u = graph_.index_of(a);
    const Vertex v = graph_.index_of(b);
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a.value));
    if (graph_.adjacent(u, v)) {
      throw Error(ErrorCode::DuplicateEdge,
                  "{" + std::to_string(a.value) + "," + std::to_string(b.value) + "}");
    }
    account(contribution(u, v), +1);
    graph_.insert_edge(u, v);
    apply_edge_structures(u, v, +1);
    process(policy_.on_pair_degree_change(u, v, +1));
  }

  void delete_edge(VertexId a, VertexId b) {
    const Vertex u = graph_.index_of(a);
    const Vertex v = graph_.index_of(b);
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a.value));
    if (!graph_.adjacent(u, v)) {
      throw Error(ErrorCode::MissingEdge,
                  "{" + std::to_string(a.value) + "," + std::to_string(b.value) + "}");
    }
    apply_edge_structures(u, v, -1);
    graph_.delete_edge(u, v);
    account(contribution(u, v), -1);
    process(policy_.on_pair_degree_change(u, v, -1));
  }

  /// Number of non-induced copies of each Q-class that use the present edge
  /// {a,b}. Leaves the engine unchanged.
  QuadVector edge_contribution(VertexId a, VertexId b) {
    const Vertex u = graph_.index_of(a);
    const Vertex v = graph_.index_of(b);
    if (u == v || !graph_.adjacent(u, v)) {
      throw Error(ErrorCode::MissingEdge,
                  "{" + std::to_string(a.value) + "," + std::to_string(b.value) + "}");
    }
    apply_edge_structures(u, v, -1);
    graph_.delete_edge(u, v);
    const Delta d = contribution(u, v);
    graph_.insert_edge(u, v);
    apply_edge_structures(u, v, +1);

    const Count n = static_cast<Count>(graph_.vertex_count());
    QuadVector out = d.stored;
    out[1] = choose2(n - 2);
    out[2] = (n - 3) * d.two_paths;
    out[5] = (n - 3) * d.triangles;
    return out;
  }

  /// Demote rebuilds every structure with w as a Low interior vertex;
  /// Promote tears them down. Structures keyed by w stay.
  void on_partition_event(const PartitionEvent& ev) {
    const Vertex w = ev.vertex;
    if (ev.direction == PartitionEvent::Direction::Demote) {
      if (!high_.contains(w)) return;
      high_.erase(w);
      apply_vertex_structures(w, +1);
    } else {
      if (high_.contains(w)) return;
      apply_vertex_structures(w, -1);
      high_.insert(w);
    }
    ++moves_;
  }

  /// m0..m10.
  QuadVector non_induced() const {
    const Count n = static_cast<Count>(graph_.vertex_count());
    const Count e = static_cast<Count>(edge_count());
    QuadVector out = m_;
    out[0] = choose4(n);
    out[1] = e * choose2(n - 2);
    out[2] = n < 3 ? 0 : (n - 3) * two_paths_;
    out[5] = n < 3 ? 0 : (n - 3) * triangles_;
    return out;
  }

  /// q0..q10.
  QuadVector induced_counts() const { return solve_unit_upper_triangular(kQuadMatrix, non_induced()); }

  friend bool operator==(const QuadCensus& a, const QuadCensus& b) {
    bool same = a.graph_ == b.graph_ && a.high_ == b.high_ && a.store_ == b.store_ &&
                a.m_ == b.m_ && a.triangles_ == b.triangles_ && a.two_paths_ == b.two_paths_;
    if constexpr (std::equality_comparable<Policy>) same = same && a.policy_ == b.policy_;
    return same;
  }

 private:
  struct Delta {
    QuadVector stored{};
    Count triangles = 0;
    Count two_paths = 0;
  };

  bool low(Vertex v) const noexcept { return high_.is_low(v); }
  bool adj(Vertex a, Vertex b) const { return graph_.adjacent(a, b); }

  void account(const Delta& d, int sign) {
    for (std::size_t k = 0; k < kQuadClasses; ++k) m_[k] += sign * d.stored[k];
    triangles_ += sign * d.triangles;
    two_paths_ += sign * d.two_paths;
  }

  // Copies of each class that the absent edge {u,v} would complete.
  Delta contribution(Vertex u, Vertex v) const {
    const Count du = static_cast<Count>(graph_.degree(u));
    const Count dv = static_cast<Count>(graph_.degree(v));
    const auto uv = store_.pair_entry(u, v);
    const Count s2uv = uv[StructureStore::S2];

    struct Member {
      Vertex x;
      bool nu, nv;
    };
    std::vector<Member> hub;
    Count h2u = 0, h2v = 0;           // sum over high b of s2[x,b]
    Count wu = 0, wv = 0;             // sum over high neighbours of deg-1
    Count hu_s2u = 0, hv_s2v = 0;     // sum over Hx of s2[x,b]
    Count hu_s2v = 0, hv_s2u = 0;     // sum over Hu of s2[a,v], over Hv of s2[u,b]
    Count hc_s2u = 0, hc_s2v = 0;
    Count s7_all = 0, s7_hu = 0, s7_hv = 0, s7_hc = 0;
    Count hc_deg = 0, hc_count = 0;

    for (Vertex b : high_.members()) {
      const Count s2ub = b == u ? 0 : store_.s2(u, b);
      const Count s2vb = b == v ? 0 : store_.s2(v, b);
      h2u += s2ub;
      h2v += s2vb;
      if (b == u || b == v) continue;
      const Count s7 = store_.s7(u, v, b);
      s7_all += s7;
      const bool nu = adj(u, b);
      const bool nv = adj(v, b);
      if (!nu && !nv) continue;
      const Count deg = static_cast<Count>(graph_.degree(b));
      if (nu) {
        wu += deg - 1;
        hu_s2u += s2ub;
        hu_s2v += s2vb;
        s7_hu += s7;
      }
      if (nv) {
        wv += deg - 1;
        hv_s2v += s2vb;
        hv_s2u += s2ub;
        s7_hv += s7;
      }
      if (nu && nv) {
        ++hc_count;
        hc_deg += deg;
        hc_s2u += s2ub;
        hc_s2v += s2vb;
        s7_hc += s7;
      }
      hub.push_back({b, nu, nv});
    }

    Count pairs_u = 0, pairs_v = 0, pairs_c = 0, cross = 0, xu = 0, xv = 0;
    for (std::size_t i = 0; i < hub.size(); ++i) {
      const Member& a = hub[i];
      for (std::size_t j = i + 1; j < hub.size(); ++j) {
        const Member& b = hub[j];
        if (!adj(a.x, b.x)) continue;
        const bool ac = a.nu && a.nv;
        const bool bc = b.nu && b.nv;
        pairs_u += a.nu && b.nu;
        pairs_v += a.nv && b.nv;
        pairs_c += ac && bc;
        cross += (a.nu && b.nv) + (b.nu && a.nv);
        xu += (ac && b.nu) + (bc && a.nu);
        xv += (ac && b.nv) + (bc && a.nv);
      }
    }

    const Count t = s2uv + hc_count;
    const Count tri_u = store_.s1(u) / 2 + hu_s2u + pairs_u;
    const Count tri_v = store_.s1(v) / 2 + hv_s2v + pairs_v;
    const Count walk_u = wu + store_.s0(u) + h2u;
    const Count walk_v = wv + store_.s0(v) + h2v;
    const Count common_deg = hc_deg + 2 * s2uv + uv[StructureStore::S4] + s7_all;

    Delta d;
    auto& c = d.stored;
    c[3] = static_cast<Count>(edge_count()) - du - dv;
    c[4] = choose2(du) + choose2(dv);
    c[6] = du * dv + walk_u + walk_v - 3 * t;
    c[7] = tri_u + tri_v + t * (du + dv - 2) + common_deg - 2 * t;
    c[8] = uv[StructureStore::S3] + hu_s2v + hv_s2u + cross;
    c[9] = choose2(t) + (xu + hc_s2u + s7_hu) + (xv + hc_s2v + s7_hv) + uv[StructureStore::S5];
    c[10] = pairs_c + s7_hc + uv[StructureStore::S6];
    d.triangles = t;
    d.two_paths = du + dv;
    return d;
  }

  // Adds (sign=+1) or removes every structure that uses the present edge
  // {x,y}.
  void apply_edge_structures(Vertex x, Vertex y, int sign) {
    using S = StructureStore;
    const auto nx = graph_.neighbors(x);
    const auto ny = graph_.neighbors(y);

    auto one_side = [&](Vertex a, Vertex o) {
      const auto na = graph_.neighbors(a);
      std::vector<Vertex> low_nbrs;
      std::int64_t meet_o = 0;
      for (Vertex b : na) {
        if (b == o || !low(b)) continue;
        low_nbrs.push_back(b);
        meet_o += adj(b, o);
      }
      const auto la = static_cast<std::int64_t>(low_nbrs.size());

      for (Vertex b : na) {
        if (b == o) continue;
        store_.add(S::S2, o, b, sign);
        if (low(b)) {
          store_.add(S::S0, o, sign);
          const bool bo = adj(b, o);
          if (bo) store_.add(S::S1, o, 2 * sign);
          for (Vertex w : graph_.neighbors(b)) {
            if (w == a || w == o) continue;
            store_.add(S::S3, o, w, sign);
            if (bo) store_.add(S::S5, o, w, sign);
          }
        }
      }

      for (std::size_t i = 0; i < na.size(); ++i) {
        if (na[i] == o) continue;
        for (std::size_t j = i + 1; j < na.size(); ++j) {
          if (na[j] != o) store_.add_s7(o, na[i], na[j], sign);
        }
      }

      for (Vertex v : na) {
        if (v == o) continue;
        const bool lv = low(v);
        std::int64_t meet_v = 0, meet_both = 0;
        for (Vertex b : low_nbrs) {
          if (!adj(b, v)) continue;
          ++meet_v;
          meet_both += adj(b, o);
        }
        store_.add(S::S4, o, v, sign * (la - lv));
        store_.add(S::S5, o, v, sign * (meet_o - (lv && adj(v, o)) + meet_v));
        store_.add(S::S6, o, v, sign * meet_both);
      }
    };

    if (low(x)) one_side(x, y);
    if (low(y)) one_side(y, x);
    if (!low(x) || !low(y)) return;

    std::vector<Vertex> common;
    for (Vertex u : nx) {
      if (u == y) continue;
      store_.add(S::S0, u, sign);
      if (adj(u, y)) {
        common.push_back(u);
        store_.add(S::S1, u, 2 * sign);
      }
      for (Vertex w : ny) {
        if (w != x && w != u) store_.add(S::S3, u, w, sign);
      }
    }
    for (Vertex u : ny) {
      if (u != x) store_.add(S::S0, u, sign);
    }
    auto pairs_of = [&](std::span<const Vertex> list, Vertex skip) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] == skip) continue;
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          if (list[j] != skip) store_.add(S::S4, list[i], list[j], sign);
        }
      }
    };
    pairs_of(nx, y);
    pairs_of(ny, x);
    for (std::size_t i = 0; i < common.size(); ++i) {
      const Vertex p = common[i];
      for (Vertex q : nx) {
        if (q != y && q != p) store_.add(S::S5, p, q, sign);
      }
      for (Vertex q : ny) {
        if (q != x && q != p) store_.add(S::S5, p, q, sign);
      }
      for (std::size_t j = i + 1; j < common.size(); ++j) store_.add(S::S6, p, common[j], sign);
    }
  }

  // Adds or removes every structure with w as a Low interior vertex.
  void apply_vertex_structures(Vertex w, int sign) {
    using S = StructureStore;
    const auto nw = graph_.neighbors(w);
    std::vector<Vertex> low_nbrs;
    for (Vertex b : nw) {
      if (low(b)) low_nbrs.push_back(b);
    }
    const auto lw = static_cast<std::int64_t>(low_nbrs.size());

    for (Vertex u : nw) {
      const bool lu = low(u);
      store_.add(S::S0, u, sign * (lw - lu));
      std::int64_t closing = 0;
      for (Vertex b : low_nbrs) {
        if (b == u) continue;
        const bool bu = adj(b, u);
        closing += bu;
        for (Vertex v : graph_.neighbors(b)) {
          if (v == w || v == u) continue;
          store_.add(S::S3, u, v, sign);
          if (bu) store_.add(S::S5, u, v, sign);
        }
        if (bu) {
          for (Vertex q : nw) {
            if (q != u && q != b) store_.add(S::S5, u, q, sign);
          }
        }
      }
      store_.add(S::S1, u, 2 * sign * closing);
    }

    for (std::size_t i = 0; i < nw.size(); ++i) {
      const std::int64_t li = low(nw[i]);
      for (std::size_t j = i + 1; j < nw.size(); ++j) {
        store_.add(S::S2, nw[i], nw[j], sign);
        store_.add(S::S4, nw[i], nw[j], sign * (lw - li - low(nw[j])));
        for (std::size_t k = j + 1; k < nw.size(); ++k) store_.add_s7(nw[i], nw[j], nw[k], sign);
      }
    }

    for (Vertex a : low_nbrs) {
      const auto na = graph_.neighbors(a);
      for (std::size_t i = 0; i < na.size(); ++i) {
        if (na[i] == w) continue;
        store_.add(S::S0, na[i], sign);
        for (std::size_t j = i + 1; j < na.size(); ++j) {
          if (na[j] != w) store_.add(S::S4, na[i], na[j], sign);
        }
      }
      std::vector<Vertex> common;
      for (Vertex z : na) {
        if (z != w && adj(z, w)) common.push_back(z);
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          store_.add(S::S6, common[i], common[j], sign);
        }
      }
    }
  }

  void process(const PartitionEvents& events) {
    for (const auto& ev : events) on_partition_event(ev);
  }

  DynamicGraph graph_;
  Policy policy_;
  HighSet high_;
  StructureStore store_;
  QuadVector m_{};
  Count triangles_ = 0;
  Count two_paths_ = 0;
  std::size_t moves_ = 0;
};

}  // namespace hcensus

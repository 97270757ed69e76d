#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hcensus/stream.hpp"
#include "hcensus/types.hpp"

namespace hcensus {

enum class GenModel : std::uint8_t { UniformPairs, PreferentialAttachment };

inline GenModel parse_model(std::string_view name) {
  if (name == "uniform" || name == "uniform-pairs") return GenModel::UniformPairs;
  if (name == "pa" || name == "preferential" || name == "preferential-attachment") {
    return GenModel::PreferentialAttachment;
  }
  throw Error(ErrorCode::BadParams, "unknown model '" + std::string(name) + "'");
}

struct GenParams {
  GenModel model = GenModel::UniformPairs;
  std::size_t n = 0;
  std::size_t target_m = 0;       // number of insertions emitted
  double delete_fraction = 0.0;   // share of edge ops that are removals
  double skew = 3.0;              // degree exponent lambda (preferential attachment)
  std::uint64_t seed = 1;
  bool directed = false;
  double reciprocity = 0.0;       // directed: chance to answer a one-way arc
};

/// Deterministic synthetic update stream.
///
/// Uniform pairs: all n vertices first, then random absent pairs.
/// Preferential attachment: vertices arrive one at a time and link to
/// earlier vertices, picking an endpoint of a random live edge (so
/// proportional to degree) with probability min(1, 2/(lambda-1)) and a
/// uniform vertex otherwise. For 2 < lambda < 3 every arrival is also
/// followed by k = (1/(lambda-2) - 1)/2 edges per attachment edge between
/// two earlier vertices, both picked by degree, which gives degree exponent
/// 2 + 1/(1+2k) = lambda. In both models each edge step is, with
/// probability delete_fraction, the removal of a uniformly chosen live edge.
class StreamGenerator {
 public:
  explicit StreamGenerator(GenParams p) : p_(p), rng_(p.seed) {
    if (p_.n < 2) throw Error(ErrorCode::BadParams, "n must be at least 2");
    if (!(p_.delete_fraction >= 0.0 && p_.delete_fraction < 1.0)) {
      throw Error(ErrorCode::BadParams, "delete fraction must lie in [0,1)");
    }
    if (!(p_.reciprocity >= 0.0 && p_.reciprocity <= 1.0)) {
      throw Error(ErrorCode::BadParams, "reciprocity must lie in [0,1]");
    }
    if (p_.model == GenModel::PreferentialAttachment && !(p_.skew > 2.0)) {
      throw Error(ErrorCode::BadParams, "skew must exceed 2");
    }
    const double pairs = static_cast<double>(p_.n) * static_cast<double>(p_.n - 1) / (p_.directed ? 1.0 : 2.0);
    if (p_.delete_fraction == 0.0 && static_cast<double>(p_.target_m) > pairs) {
      throw Error(ErrorCode::BadParams, "target m exceeds the number of vertex pairs");
    }
  }

  std::vector<StreamOp> generate() {
    ops_.clear();
    if (p_.model == GenModel::UniformPairs) {
      uniform();
    } else {
      preferential();
    }
    return ops_;
  }

 private:
  using Op = StreamOp::Kind;

  void uniform() {
    for (std::size_t v = 0; v < p_.n; ++v) add_vertex(v);
    while (inserted_ < p_.target_m) {
      if (maybe_delete()) continue;
      std::uint64_t u = 0, v = 0;
      if (!sample_absent([&] { return uniform_vertex(p_.n); }, [&] { return uniform_vertex(p_.n); }, u, v)) {
        throw Error(ErrorCode::BadParams, "graph too dense to place more edges");
      }
      insert(u, v);
    }
  }

  void preferential() {
    const double pref = std::min(1.0, 2.0 / (p_.skew - 1.0));
    const double internal = p_.skew < 3.0 ? (1.0 / (p_.skew - 2.0) - 1.0) / 2.0 : 0.0;
    const double per_vertex = static_cast<double>(p_.target_m) / (static_cast<double>(p_.n) * (1.0 + internal));
    auto target = [&](std::size_t limit) -> std::uint64_t {
      if (!edges_.empty() && coin(pref)) {
        const auto key = edges_[pick(edges_.size())];
        return coin(0.5) ? key >> 32 : key & 0xffffffffU;
      }
      return uniform_vertex(limit);
    };

    double attach = 0.0, budget = 0.0;
    add_vertex(0);
    for (std::size_t v = 1; v < p_.n && inserted_ < p_.target_m; ++v) {
      add_vertex(v);
      attach += per_vertex;
      const std::size_t want = std::min(static_cast<std::size_t>(attach), v);
      attach -= static_cast<double>(want);
      for (std::size_t k = 0; k < want && inserted_ < p_.target_m;) {
        if (maybe_delete()) continue;
        std::uint64_t a = 0, b = 0;
        if (sample_absent([&] { return static_cast<std::uint64_t>(v); }, [&] { return target(v); }, a, b)) {
          insert(a, b);
        }
        ++k;
      }
      for (budget += internal * static_cast<double>(want); budget >= 1.0 && inserted_ < p_.target_m;) {
        if (maybe_delete()) continue;
        std::uint64_t a = 0, b = 0;
        if (sample_absent([&] { return target(v + 1); }, [&] { return target(v + 1); }, a, b)) insert(a, b);
        budget -= 1.0;
      }
    }
    for (std::size_t v = vertices_; v < p_.n; ++v) add_vertex(v);
    while (inserted_ < p_.target_m) {
      if (maybe_delete()) continue;
      std::uint64_t a = 0, b = 0;
      if (!sample_absent([&] { return uniform_vertex(p_.n); }, [&] { return target(p_.n); }, a, b)) {
        throw Error(ErrorCode::BadParams, "graph too dense to place more edges");
      }
      insert(a, b);
    }
  }

  template <class A, class B>
  bool sample_absent(A&& first, B&& second, std::uint64_t& u, std::uint64_t& v) {
    if (p_.directed && !edges_.empty() && coin(p_.reciprocity)) {
      const std::uint64_t k = edges_[pick(edges_.size())];
      if (!live_.contains(key(k & 0xffffffffU, k >> 32))) {
        u = k & 0xffffffffU;
        v = k >> 32;
        return true;
      }
    }
    for (int attempt = 0; attempt < 1000; ++attempt) {
      u = first();
      v = second();
      if (u == v || live_.contains(key(u, v))) continue;
      if (p_.directed || !live_.contains(key(v, u))) return true;
    }
    return false;
  }

  static std::uint64_t key(std::uint64_t u, std::uint64_t v) { return (u << 32) | v; }

  bool coin(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }
  std::size_t pick(std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng_); }
  std::uint64_t uniform_vertex(std::size_t limit) { return pick(limit); }

  void add_vertex(std::uint64_t v) {
    ops_.push_back({Op::AddVertex, VertexId{v}, {}, 0});
    ++vertices_;
  }

  void insert(std::uint64_t u, std::uint64_t v) {
    ops_.push_back({Op::AddEdge, VertexId{u}, VertexId{v}, 0});
    live_.emplace(key(u, v), edges_.size());
    edges_.push_back(key(u, v));
    ++inserted_;
  }

  bool maybe_delete() {
    if (edges_.empty() || !coin(p_.delete_fraction)) return false;
    const std::size_t i = pick(edges_.size());
    const std::uint64_t k = edges_[i];
    ops_.push_back({Op::RemoveEdge, VertexId{k >> 32}, VertexId{k & 0xffffffffU}, 0});
    live_.erase(k);
    if (i + 1 != edges_.size()) {
      edges_[i] = edges_.back();
      live_[edges_[i]] = i;
    }
    edges_.pop_back();
    return true;
  }

  GenParams p_;
  std::mt19937_64 rng_;
  std::vector<StreamOp> ops_;
  std::vector<std::uint64_t> edges_;  // live edges/arcs as (u<<32)|v
  std::unordered_map<std::uint64_t, std::size_t> live_;
  std::size_t inserted_ = 0;
  std::size_t vertices_ = 0;
};

inline std::vector<StreamOp> generate_stream(const GenParams& p) { return StreamGenerator(p).generate(); }

}  // namespace hcensus

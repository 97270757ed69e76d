#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hcensus/types.hpp"

namespace hcensus {

enum class Side : std::uint8_t { Low, High };

struct PartitionEvent {
  enum class Direction : std::uint8_t { Promote, Demote };
  Vertex vertex = 0;
  Direction direction = Direction::Promote;

  friend bool operator==(const PartitionEvent&, const PartitionEvent&) = default;
};

using PartitionEvents = std::vector<PartitionEvent>;

/// Exact h-index over a multiset of degrees that changes by +-1 steps.
class HIndexTracker {
 public:
  std::size_t h() const noexcept { return h_; }

  void add_vertex() {
    bump(0, +1);
    if (h_ == 0) ++at_least_h_;
  }

  void remove_vertex() {
    bump(0, -1);
    if (h_ == 0) --at_least_h_;
  }

  void increment(std::size_t old_degree) {
    bump(old_degree, -1);
    bump(old_degree + 1, +1);
    if (old_degree + 1 == h_) ++at_least_h_;
    const std::size_t above = at_least_h_ - histogram_[h_];
    if (above >= h_ + 1) {
      ++h_;
      at_least_h_ = above;
    }
  }

  void decrement(std::size_t old_degree) {
    bump(old_degree, -1);
    bump(old_degree - 1, +1);
    if (old_degree == h_) --at_least_h_;
    if (at_least_h_ < h_) {
      --h_;
      at_least_h_ += histogram_[h_];
    }
  }

  /// Recomputes h from the histogram; O(max degree).
  std::size_t recompute() const {
    std::size_t at_least = 0;
    for (std::size_t d = histogram_.size(); d-- > 0;) {
      at_least += histogram_[d];
      if (at_least >= d) return d;
    }
    return 0;
  }

  friend bool operator==(const HIndexTracker& a, const HIndexTracker& b) {
    if (a.h_ != b.h_ || a.at_least_h_ != b.at_least_h_) return false;
    const std::size_t n = std::max(a.histogram_.size(), b.histogram_.size());
    for (std::size_t d = 0; d < n; ++d) {
      if (a.count(d) != b.count(d)) return false;
    }
    return true;
  }

 private:
  std::size_t count(std::size_t d) const { return d < histogram_.size() ? histogram_[d] : 0; }

  void bump(std::size_t degree, int sign) {
    if (degree >= histogram_.size()) histogram_.resize(degree + 1, 0);
    if (sign > 0) ++histogram_[degree]; else --histogram_[degree];
  }

  std::vector<std::size_t> histogram_{0};
  std::size_t h_ = 0;
  std::size_t at_least_h_ = 0;  // vertices with degree >= h_
};

/// Partition policies decide membership; engines mirror it through events.
template <class P>
concept PartitionPolicy = requires(P p, const P cp, Vertex v, int delta) {
  { p.on_vertex_added(v) } -> std::same_as<PartitionEvents>;
  { p.on_vertex_removed(v) } -> std::same_as<PartitionEvents>;
  { p.on_degree_change(v, delta) } -> std::same_as<PartitionEvents>;
  { p.on_pair_degree_change(v, v, delta) } -> std::same_as<PartitionEvents>;
  { cp.h_index() } -> std::convertible_to<std::size_t>;
};

/// Hysteresis partition around the h-index.
///
/// Promote a Low vertex when its degree reaches 2*max(h,1); demote a High
/// vertex when its degree falls below ceil(h/2); keep |H| <= 4h+4 by evicting
/// minimum-degree members (lowest index on ties).
class HPartition {
 public:
  std::size_t h_index() const noexcept { return tracker_.h(); }
  std::size_t high_count() const noexcept { return by_degree_.size(); }
  std::size_t moves() const noexcept { return moves_; }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  const HIndexTracker& tracker() const noexcept { return tracker_; }

  Side side(Vertex v) const { return v < high_.size() && high_[v] ? Side::High : Side::Low; }

  std::vector<Vertex> high_vertices() const {
    std::vector<Vertex> out;
    for (const auto& [deg, v] : by_degree_) out.push_back(v);
    return out;
  }

  std::size_t promote_threshold() const noexcept { return 2 * std::max<std::size_t>(h_index(), 1); }
  std::size_t demote_threshold() const noexcept { return (h_index() + 1) / 2; }
  std::size_t capacity_limit() const noexcept { return 4 * h_index() + 4; }

  PartitionEvents on_vertex_added(Vertex v) {
    if (v >= degree_.size()) {
      degree_.resize(v + 1, 0);
      high_.resize(v + 1, 0);
    }
    degree_[v] = 0;
    high_[v] = 0;
    tracker_.add_vertex();
    return {};
  }

  PartitionEvents on_vertex_removed(Vertex v) {
    PartitionEvents events;
    if (high_[v]) demote(v, events);
    tracker_.remove_vertex();
    enforce(events);
    return events;
  }

  PartitionEvents on_degree_change(Vertex v, int delta) {
    apply_delta(v, delta);
    PartitionEvents events;
    maybe_promote(v, events);
    enforce(events);
    return events;
  }

  /// Both endpoints of an edge change degree; rules run after both changes.
  PartitionEvents on_pair_degree_change(Vertex u, Vertex v, int delta) {
    apply_delta(u, delta);
    apply_delta(v, delta);
    PartitionEvents events;
    maybe_promote(u, events);
    maybe_promote(v, events);
    enforce(events);
    return events;
  }

  friend bool operator==(const HPartition& a, const HPartition& b) {
    return a.tracker_ == b.tracker_ && a.by_degree_ == b.by_degree_;
  }

 private:
  void apply_delta(Vertex v, int delta) {
    std::size_t& deg = degree_[v];
    if (high_[v]) by_degree_.erase({deg, v});
    if (delta > 0) {
      tracker_.increment(deg);
      ++deg;
    } else {
      tracker_.decrement(deg);
      --deg;
    }
    if (high_[v]) by_degree_.emplace(deg, v);
  }

  void maybe_promote(Vertex v, PartitionEvents& events) {
    if (!high_[v] && degree_[v] >= promote_threshold()) {
      high_[v] = 1;
      by_degree_.emplace(degree_[v], v);
      events.push_back({v, PartitionEvent::Direction::Promote});
      ++moves_;
    }
  }

  void demote(Vertex v, PartitionEvents& events) {
    by_degree_.erase({degree_[v], v});
    high_[v] = 0;
    events.push_back({v, PartitionEvent::Direction::Demote});
    ++moves_;
  }

  void enforce(PartitionEvents& events) {
    const std::size_t floor = demote_threshold();
    while (!by_degree_.empty() && by_degree_.begin()->first < floor) {
      demote(by_degree_.begin()->second, events);
    }
    while (by_degree_.size() > capacity_limit()) {
      demote(by_degree_.begin()->second, events);
    }
  }

  HIndexTracker tracker_;
  std::vector<std::size_t> degree_;
  std::vector<std::uint8_t> high_;
  std::set<std::pair<std::size_t, Vertex>> by_degree_;
  std::size_t moves_ = 0;
};

/// A partition fixed up front: the listed dense indices are High from the
/// moment they are created and nothing ever moves afterwards. Useful to pin
/// the dictionaries while probing reversibility.
class FrozenPartition {
 public:
  FrozenPartition() = default;
  explicit FrozenPartition(std::vector<Vertex> high) : high_(high.begin(), high.end()) {}

  std::size_t h_index() const noexcept { return tracker_.h(); }

  PartitionEvents on_vertex_added(Vertex v) {
    tracker_.add_vertex();
    if (v >= degree_.size()) degree_.resize(v + 1, 0);
    degree_[v] = 0;
    if (high_.contains(v)) return {{v, PartitionEvent::Direction::Promote}};
    return {};
  }
  PartitionEvents on_vertex_removed(Vertex v) {
    tracker_.remove_vertex();
    if (high_.contains(v)) return {{v, PartitionEvent::Direction::Demote}};
    return {};
  }
  PartitionEvents on_degree_change(Vertex v, int delta) {
    if (delta > 0) tracker_.increment(degree_[v]++);
    else tracker_.decrement(degree_[v]--);
    return {};
  }
  PartitionEvents on_pair_degree_change(Vertex u, Vertex v, int delta) {
    on_degree_change(u, delta);
    return on_degree_change(v, delta);
  }

  friend bool operator==(const FrozenPartition& a, const FrozenPartition& b) {
    return a.tracker_ == b.tracker_ && a.high_ == b.high_;
  }

 private:
  std::set<Vertex> high_;
  HIndexTracker tracker_;
  std::vector<std::size_t> degree_;
};

/// Engine-side mirror of the High set: membership flags plus a dense list
/// for O(|H|) iteration.
class HighSet {
 public:
  bool contains(Vertex v) const noexcept { return v < flag_.size() && flag_[v]; }
  bool is_low(Vertex v) const noexcept { return !contains(v); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  void insert(Vertex v) {
    if (v >= flag_.size()) {
      flag_.resize(v + 1, 0);
      pos_.resize(v + 1, 0);
    }
    if (flag_[v]) return;
    flag_[v] = 1;
    pos_[v] = static_cast<std::uint32_t>(members_.size());
    members_.push_back(v);
  }

  void erase(Vertex v) {
    if (!contains(v)) return;
    flag_[v] = 0;
    const Vertex last = members_.back();
    members_[pos_[v]] = last;
    pos_[last] = pos_[v];
    members_.pop_back();
  }

  friend bool operator==(const HighSet& a, const HighSet& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.members_.begin(), a.members_.end(),
                       [&](Vertex v) { return b.contains(v); });
  }

 private:
  std::vector<std::uint8_t> flag_;
  std::vector<std::uint32_t> pos_;
  std::vector<Vertex> members_;
};

}  // namespace hcensus

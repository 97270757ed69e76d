#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcensus/dynamic_graph.hpp"
#include "hcensus/multiplicity.hpp"
#include "hcensus/types.hpp"

namespace hcensus::oracle {

inline constexpr std::size_t kDefaultCap = 64;

/// n, m and an order-independent hash of the arc set (by external id).
struct GraphFingerprint {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::uint64_t hash = 0;

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

inline GraphFingerprint fingerprint(const DynamicGraph& g) {
  GraphFingerprint fp{g.vertex_count(), g.arc_count(), 0};
  for (Vertex u : g.live_vertices()) {
    const std::uint64_t idu = g.id_of(u).value;
    fp.hash += detail::mix64(idu ^ 0x5bd1e995ULL);
    for (Vertex w : g.neighbors(u)) {
      if (g.has_arc(u, w)) fp.hash += detail::mix64(detail::mix64(idu) ^ g.id_of(w).value);
    }
  }
  return fp;
}

struct DirectedCensusResult {
  std::array<Count, kTriadClasses> induced{};
  std::array<Count, kTriadClasses> non_induced{};
  std::array<Count, kTriangleClasses> triangles{};
};

struct UndirectedCensusResult {
  std::array<Count, kQuadClasses> induced{};
  std::array<Count, kQuadClasses> non_induced{};
  Count triangles = 0;
  Count two_paths = 0;
};

inline void check_cap(const DynamicGraph& g, std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw Error(ErrorCode::GraphTooLarge, std::to_string(g.vertex_count()) + " vertices exceed oracle cap " +
                                              std::to_string(cap));
  }
}

/// Classifies every vertex triple.
inline DirectedCensusResult census_directed3(const DynamicGraph& g, std::size_t cap = kDefaultCap) {
  check_cap(g, cap);
  const auto vs = g.live_vertices();
  DirectedCensusResult r;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const PairState ab = g.pair_state(vs[i], vs[j]);
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        ++r.induced[classify_triple(ab, g.pair_state(vs[j], vs[k]), g.pair_state(vs[k], vs[i]))];
      }
    }
  }
  r.non_induced = multiply(kTriadMatrix, r.induced);
  for (std::size_t d = 0; d < kTriangleClasses; ++d) r.triangles[d] = r.induced[kTriangleToTriad[d]];
  return r;
}

/// Classifies every vertex quadruple of the undirected view (a pair is an
/// edge when either arc is present).
inline UndirectedCensusResult census_undirected4(const DynamicGraph& g, std::size_t cap = kDefaultCap) {
  check_cap(g, cap);
  const auto vs = g.live_vertices();
  const std::size_t n = vs.size();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj[i * n + j] = i != j && g.adjacent(vs[i], vs[j]);
  }
  auto e = [&](std::size_t a, std::size_t b) { return adj[a * n + b] != 0; };

  UndirectedCensusResult r;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const unsigned ab = e(a, b);
      for (std::size_t c = b + 1; c < n; ++c) {
        const unsigned abc = ab | e(a, c) << 1 | e(b, c) << 3;
        if (ab && e(a, c) && e(b, c)) ++r.triangles;
        for (std::size_t d = c + 1; d < n; ++d) {
          const unsigned bits = abc | e(a, d) << 2 | e(b, d) << 4 | e(c, d) << 5;
          ++r.induced[classify_quad(bits)];
        }
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) r.two_paths += choose2(static_cast<Count>(g.degree(vs[v])));
  r.non_induced = multiply(kQuadMatrix, r.induced);
  return r;
}

/// Named count vectors plus the graph they were taken from.
struct CensusSnapshot {
  GraphFingerprint graph;
  std::vector<std::pair<std::string, std::vector<Count>>> components;

  void add(std::string name, std::span<const Count> values) {
    components.emplace_back(std::move(name), std::vector<Count>(values.begin(), values.end()));
  }
  void add(std::string name, Count value) { components.emplace_back(std::move(name), std::vector<Count>{value}); }
};

inline CensusSnapshot snapshot(const DynamicGraph& g, const DirectedCensusResult& r) {
  CensusSnapshot s{fingerprint(g), {}};
  s.add("t", r.induced);
  s.add("n", r.non_induced);
  s.add("d", r.triangles);
  return s;
}

inline CensusSnapshot snapshot(const DynamicGraph& g, const UndirectedCensusResult& r) {
  CensusSnapshot s{fingerprint(g), {}};
  s.add("q", r.induced);
  s.add("m", r.non_induced);
  s.add("triangles", r.triangles);
  s.add("two_paths", r.two_paths);
  return s;
}

struct Mismatch {
  std::string component;  // e.g. "t5"
  Count expected = 0;
  Count actual = 0;
  std::size_t op_index = 0;

  std::string describe() const {
    return "op " + std::to_string(op_index) + ": " + component + " expected " + to_string(expected) +
           " got " + to_string(actual);
  }
};

/// First differing entry between an engine snapshot and an oracle snapshot,
/// or nullopt when every component agrees.
inline std::optional<Mismatch> diff(const CensusSnapshot& engine, const CensusSnapshot& expected,
                                    std::size_t op_index = 0) {
  if (!(engine.graph == expected.graph)) {
    throw Error(ErrorCode::FingerprintMismatch, "snapshots were taken from different graphs");
  }
  for (const auto& [name, want] : expected.components) {
    const std::vector<Count>* got = nullptr;
    for (const auto& [other, values] : engine.components) {
      if (other == name) got = &values;
    }
    if (got == nullptr || got->size() != want.size()) {
      return Mismatch{name + " (missing)", 0, 0, op_index};
    }
    for (std::size_t k = 0; k < want.size(); ++k) {
      if ((*got)[k] != want[k]) {
        const std::string label = want.size() == 1 ? name : name + std::to_string(k);
        return Mismatch{label, want[k], (*got)[k], op_index};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hcensus::oracle

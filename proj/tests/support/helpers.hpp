#pragma once

#include <gtest/gtest.h>

#include <array>
#include <initializer_list>
#include <utility>

#include "hcensus/types.hpp"

namespace hcensus::testing {

inline VertexId id(std::uint64_t v) { return VertexId{v}; }

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

template <std::size_t K>
std::array<long long, K> narrow(const std::array<Count, K>& v) {
  std::array<long long, K> out{};
  for (std::size_t i = 0; i < K; ++i) out[i] = static_cast<long long>(v[i]);
  return out;
}

template <std::size_t K>
std::array<long long, K> one_hot(std::size_t k) {
  std::array<long long, K> out{};
  out[k] = 1;
  return out;
}

/// Engine with vertices 0..n-1 and the given arcs (or edges).
template <class Engine>
Engine build(std::size_t n, std::initializer_list<std::pair<int, int>> links) {
  Engine e;
  for (std::size_t v = 0; v < n; ++v) e.add_vertex(id(v));
  for (auto [a, b] : links) {
    if constexpr (requires { e.insert_arc(id(0), id(1)); }) {
      e.insert_arc(id(a), id(b));
    } else {
      e.insert_edge(id(a), id(b));
    }
  }
  return e;
}

}  // namespace hcensus::testing

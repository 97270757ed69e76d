#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hcensus/directed_census.hpp"
#include "hcensus/oracle.hpp"
#include "hcensus/quad_census.hpp"
#include "hcensus/runner.hpp"
#include "support/helpers.hpp"

using namespace hcensus;
using hcensus::testing::expect_error;
using hcensus::testing::id;
using hcensus::testing::narrow;
using hcensus::testing::one_hot;

namespace {

DynamicGraph digraph(std::size_t n, std::initializer_list<std::pair<int, int>> arcs) {
  DynamicGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex(id(v));
  for (auto [a, b] : arcs) g.insert_arc(id(a), id(b));
  return g;
}

}  // namespace

TEST(OracleDirected, EmptyTriple) {
  const auto r = oracle::census_directed3(digraph(3, {}));
  EXPECT_EQ(narrow(r.induced), one_hot<16>(0));
  EXPECT_EQ(r.non_induced[0], 1);
  for (std::size_t k = 1; k < 16; ++k) EXPECT_EQ(r.non_induced[k], 0) << k;
}

TEST(OracleDirected, ReciprocalTriangle) {
  const auto r = oracle::census_directed3(digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}}));
  EXPECT_EQ(narrow(r.induced), one_hot<16>(15));
  EXPECT_EQ(r.non_induced[14], 6);
  EXPECT_EQ(r.non_induced[15], 1);
  EXPECT_EQ(r.triangles[6], 1);
}

TEST(OracleDirected, CyclicTriangle) {
  const auto r = oracle::census_directed3(digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(r.non_induced[8], 1);
  EXPECT_EQ(r.non_induced[9], 0);
  EXPECT_EQ(r.non_induced[3], 3);
  EXPECT_EQ(r.triangles[0], 1);
}

TEST(OracleUndirected, CompleteK4) {
  const auto e = hcensus::testing::build<QuadCensus<>>(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto r = oracle::census_undirected4(e.graph());
  EXPECT_EQ(narrow(r.non_induced), (std::array<long long, 11>{1, 6, 12, 3, 4, 4, 12, 12, 3, 6, 1}));
  EXPECT_EQ(r.triangles, 4);
  EXPECT_EQ(r.two_paths, 12);
}

TEST(OracleUndirected, FourCycle) {
  const auto e = hcensus::testing::build<QuadCensus<>>(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto r = oracle::census_undirected4(e.graph());
  EXPECT_EQ(narrow(r.induced), one_hot<11>(8));
  EXPECT_EQ(r.non_induced[8], 1);
  EXPECT_EQ(r.non_induced[6], 4);
  EXPECT_EQ(r.non_induced[3], 2);
  EXPECT_EQ(r.triangles, 0);
}

TEST(OracleUndirected, EmptyFive) {
  const auto r = oracle::census_undirected4(digraph(5, {}));
  EXPECT_EQ(r.induced[0], 5);
  EXPECT_EQ(r.non_induced[0], 5);
}

TEST(Oracle, RejectsLargeGraphs) {
  const auto g = digraph(10, {});
  expect_error(ErrorCode::GraphTooLarge, [&] { oracle::census_directed3(g, 9); });
  expect_error(ErrorCode::GraphTooLarge, [&] { oracle::census_undirected4(g, 9); });
  EXPECT_NO_THROW(oracle::census_directed3(g, 10));
}

TEST(OracleDiff, EqualSnapshots) {
  const auto g = digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  const auto a = oracle::snapshot(g, oracle::census_directed3(g));
  EXPECT_FALSE(oracle::diff(a, a).has_value());
}

TEST(OracleDiff, ReportsFirstDifference) {
  const auto g = digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  const auto want = oracle::snapshot(g, oracle::census_directed3(g));
  auto got = want;
  got.components[0].second[5] += 1;
  const auto m = oracle::diff(got, want, 17);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->component, "t5");
  EXPECT_EQ(m->actual - m->expected, 1);
  EXPECT_EQ(m->op_index, 17u);
  EXPECT_NE(m->describe().find("t5"), std::string::npos);
}

TEST(OracleDiff, DifferentGraphsThrow) {
  const auto g1 = digraph(3, {{0, 1}});
  const auto g2 = digraph(3, {{1, 0}});
  const auto a = oracle::snapshot(g1, oracle::census_directed3(g1));
  const auto b = oracle::snapshot(g2, oracle::census_directed3(g2));
  expect_error(ErrorCode::FingerprintMismatch, [&] { oracle::diff(a, b); });
}

TEST(OracleFingerprint, IndependentOfInsertionOrder) {
  const auto a = digraph(4, {{0, 1}, {2, 3}, {3, 1}});
  const auto b = digraph(4, {{3, 1}, {0, 1}, {2, 3}});
  EXPECT_EQ(oracle::fingerprint(a), oracle::fingerprint(b));
  EXPECT_FALSE(oracle::fingerprint(a) == oracle::fingerprint(digraph(4, {{0, 1}, {2, 3}, {1, 3}})));
}

TEST(Oracle, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  const int n = 9;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  DynamicGraph a, b;
  for (int v = 0; v < n; ++v) {
    a.add_vertex(id(v));
    b.add_vertex(id(100 + perm[v]));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || rng() % 4 != 0) continue;
      a.insert_arc(id(x), id(y));
      b.insert_arc(id(100 + perm[x]), id(100 + perm[y]));
    }
  }
  const auto ra = oracle::census_directed3(a);
  const auto rb = oracle::census_directed3(b);
  EXPECT_EQ(narrow(ra.induced), narrow(rb.induced));
  EXPECT_EQ(narrow(ra.triangles), narrow(rb.triangles));
  Count total = 0;
  for (auto c : ra.induced) total += c;
  EXPECT_EQ(total, Count{n * (n - 1) * (n - 2) / 6});
}

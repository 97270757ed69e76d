#include <gtest/gtest.h>

#include <random>

#include "hcensus/dynamic_graph.hpp"
#include "support/helpers.hpp"

using namespace hcensus;
using hcensus::testing::expect_error;
using hcensus::testing::id;

TEST(DynamicGraph, AddVertex) {
  DynamicGraph g;
  const Vertex v = g.add_vertex(id(7));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.degree(v), 0u);
  expect_error(ErrorCode::DuplicateVertex, [&] { g.add_vertex(id(7)); });
}

TEST(DynamicGraph, FourIsolatedVertices) {
  DynamicGraph g;
  for (int v = 0; v < 4; ++v) g.add_vertex(id(v));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.arc_count(), 0u);
}

TEST(DynamicGraph, RemoveVertex) {
  DynamicGraph g;
  g.add_vertex(id(7));
  g.add_vertex(id(1));
  g.add_vertex(id(2));
  g.remove_vertex(id(7));
  EXPECT_EQ(g.vertex_count(), 2u);
  g.insert_arc(id(1), id(2));
  expect_error(ErrorCode::NotIsolated, [&] { g.remove_vertex(id(1)); });
  expect_error(ErrorCode::UnknownVertex, [&] { g.remove_vertex(id(99)); });
}

TEST(DynamicGraph, InsertArcTransitions) {
  DynamicGraph g;
  const Vertex a = g.add_vertex(id(1));
  const Vertex b = g.add_vertex(id(2));
  auto t = g.insert_arc(a, b);
  EXPECT_EQ(t.before, PairState::None);
  EXPECT_EQ(t.after, PairState::Fwd);
  EXPECT_EQ(g.stats(a).out, 1u);
  EXPECT_EQ(g.stats(b).in, 1u);

  t = g.insert_arc(b, a);
  EXPECT_EQ(t.before, PairState::Rev);
  EXPECT_EQ(t.after, PairState::Recip);
  EXPECT_EQ(g.stats(a), (VertexStats{0, 0, 1}));
  EXPECT_EQ(g.stats(b), (VertexStats{0, 0, 1}));
  EXPECT_EQ(g.reciprocal_pairs(), 1u);
  expect_error(ErrorCode::SelfLoop, [&] { g.insert_arc(a, a); });
  expect_error(ErrorCode::DuplicateArc, [&] { g.insert_arc(a, b); });
}

TEST(DynamicGraph, DeleteArc) {
  DynamicGraph g;
  const Vertex a = g.add_vertex(id(1));
  const Vertex b = g.add_vertex(id(2));
  const DynamicGraph empty = g;
  g.insert_arc(a, b);
  g.delete_arc(a, b);
  EXPECT_EQ(g, empty);
  EXPECT_EQ(g.stats(a), VertexStats{});

  g.insert_arc(a, b);
  g.insert_arc(b, a);
  const auto t = g.delete_arc(a, b);
  EXPECT_EQ(t.before, PairState::Recip);
  EXPECT_EQ(t.after, PairState::Rev);
  expect_error(ErrorCode::MissingArc, [&] { g.delete_arc(a, b); });
}

TEST(DynamicGraph, PairState) {
  DynamicGraph g;
  EXPECT_EQ(g.pair_state(id(1), id(2)), PairState::None);
  g.add_vertex(id(1));
  g.add_vertex(id(2));
  g.insert_arc(id(1), id(2));
  EXPECT_EQ(g.pair_state(id(1), id(2)), PairState::Fwd);
  EXPECT_EQ(g.pair_state(id(2), id(1)), PairState::Rev);
  g.insert_arc(id(2), id(1));
  EXPECT_EQ(g.pair_state(id(1), id(2)), PairState::Recip);
  EXPECT_EQ(g.pair_state(id(2), id(1)), PairState::Recip);
}

TEST(DynamicGraph, Neighbors) {
  DynamicGraph g;
  const Vertex c = g.add_vertex(id(0));
  for (int v = 1; v <= 3; ++v) g.insert_arc(c, g.add_vertex(id(v)));
  ASSERT_EQ(g.neighbors(c).size(), 3u);
  for (Vertex w : g.neighbors(c)) EXPECT_EQ(g.relation(c, w), Relation::Out);

  const Vertex x = g.add_vertex(id(10));
  const Vertex y = g.add_vertex(id(11));
  g.insert_arc(x, y);
  g.insert_arc(y, x);
  ASSERT_EQ(g.neighbors(x).size(), 1u);
  EXPECT_EQ(g.relation(x, g.neighbors(x)[0]), Relation::Recip);

  EXPECT_TRUE(g.neighbors(g.add_vertex(id(20))).empty());
}

TEST(DynamicGraph, RandomStreamInvariants) {
  std::mt19937_64 rng(7);
  DynamicGraph g;
  const int n = 30;
  for (int v = 0; v < n; ++v) g.add_vertex(id(v));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int step = 0; step < 5000; ++step) {
    const Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    const DynamicGraph before = g;
    if (g.has_arc(u, v)) {
      g.delete_arc(u, v);
    } else {
      g.insert_arc(u, v);
      if (step % 7 == 0) {
        g.delete_arc(u, v);
        ASSERT_EQ(g, before);
        g.insert_arc(u, v);
      }
    }

    if (step % 97 != 0) continue;
    std::size_t ins = 0, outs = 0, recips = 0;
    for (Vertex x : g.live_vertices()) {
      const auto& s = g.stats(x);
      ins += s.in;
      outs += s.out;
      recips += s.recip;
      ASSERT_EQ(s.degree(), g.neighbors(x).size());
      for (Vertex y : g.neighbors(x)) ASSERT_EQ(g.pair_state(x, y), mirror(g.pair_state(y, x)));
    }
    EXPECT_EQ(ins, outs);
    EXPECT_EQ(ins, g.arc_count() - 2 * g.reciprocal_pairs());
    EXPECT_EQ(recips, 2 * g.reciprocal_pairs());
  }
}

TEST(DynamicGraph, IndexReuse) {
  DynamicGraph g;
  const Vertex a = g.add_vertex(id(5));
  g.remove_vertex(id(5));
  const Vertex b = g.add_vertex(id(6));
  EXPECT_EQ(a, b);
  EXPECT_EQ(g.id_of(b), id(6));
  EXPECT_FALSE(g.contains(id(5)));
}

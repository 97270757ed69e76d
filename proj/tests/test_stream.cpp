#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hcensus/generator.hpp"
#include "hcensus/runner.hpp"
#include "hcensus/stream.hpp"
#include "support/helpers.hpp"

using namespace hcensus;
using hcensus::testing::expect_error;
using hcensus::testing::id;

TEST(StreamParser, Operations) {
  std::istringstream in("av 3\n# comment\n\nae 1 2   # trailing\nre 1 2\nrv 3\nq\n");
  const auto ops = parse_stream(in);
  ASSERT_EQ(ops.size(), 5u);
  EXPECT_EQ(ops[0].kind, StreamOp::Kind::AddVertex);
  EXPECT_EQ(ops[0].u, id(3));
  EXPECT_EQ(ops[1].kind, StreamOp::Kind::AddEdge);
  EXPECT_EQ(ops[1].line, 4u);
  EXPECT_EQ(ops[2].kind, StreamOp::Kind::RemoveEdge);
  EXPECT_EQ(ops[3].kind, StreamOp::Kind::RemoveVertex);
  EXPECT_EQ(ops[4].kind, StreamOp::Kind::Query);
  for (const auto& op : ops) EXPECT_EQ(*parse_line(format(op), 1), op);
}

TEST(StreamParser, ErrorsCarryLineNumber) {
  for (const char* bad : {"ae 1\n", "zz 1 2\n", "ae 1 x\n", "q 4\n", "av -1\n"}) {
    std::istringstream in(std::string("av 1\n") + bad);
    try {
      parse_stream(in);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
}

TEST(Generator, Deterministic) {
  GenParams p;
  p.n = 50;
  p.target_m = 200;
  p.delete_fraction = 0.2;
  p.seed = 77;
  EXPECT_EQ(generate_stream(p), generate_stream(p));
  p.seed = 78;
  const auto other = generate_stream(p);
  p.seed = 77;
  EXPECT_NE(generate_stream(p), other);
}

TEST(Generator, DeleteFraction) {
  GenParams p;
  p.n = 200;
  p.target_m = 3000;
  p.delete_fraction = 0.4;
  p.seed = 3;
  std::size_t adds = 0, removes = 0;
  for (const auto& op : generate_stream(p)) {
    adds += op.kind == StreamOp::Kind::AddEdge;
    removes += op.kind == StreamOp::Kind::RemoveEdge;
  }
  EXPECT_EQ(adds, 3000u);
  const double share = static_cast<double>(removes) / static_cast<double>(adds + removes);
  EXPECT_NEAR(share, 0.4, 0.03);
}

TEST(Generator, StreamIsValid) {
  for (auto model : {GenModel::UniformPairs, GenModel::PreferentialAttachment}) {
    for (bool directed : {false, true}) {
      GenParams p;
      p.model = model;
      p.n = 40;
      p.target_m = 300;
      p.delete_fraction = 0.3;
      p.directed = directed;
      p.reciprocity = 0.5;
      p.seed = 12;
      DynamicGraph g;
      for (const auto& op : generate_stream(p)) {
        switch (op.kind) {
          case StreamOp::Kind::AddVertex: g.add_vertex(op.u); break;
          case StreamOp::Kind::AddEdge:
            if (!directed) ASSERT_FALSE(g.adjacent(g.index_of(op.u), g.index_of(op.v)));
            ASSERT_NO_THROW(g.insert_arc(op.u, op.v));
            break;
          case StreamOp::Kind::RemoveEdge: ASSERT_NO_THROW(g.delete_arc(op.u, op.v)); break;
          default: FAIL();
        }
      }
      EXPECT_EQ(g.vertex_count(), 40u);
    }
  }
}

namespace {

std::size_t pa_h_index(double skew) {
  GenParams p;
  p.model = GenModel::PreferentialAttachment;
  p.n = 20000;
  p.target_m = 80000;
  p.skew = skew;
  p.seed = 5;
  DynamicGraph g;
  for (const auto& op : generate_stream(p)) {
    if (op.kind == StreamOp::Kind::AddVertex) g.add_vertex(op.u);
    if (op.kind == StreamOp::Kind::AddEdge) g.insert_arc(op.u, op.v);
  }
  EXPECT_EQ(g.adjacent_pairs(), 80000u);
  std::vector<std::size_t> deg;
  for (Vertex v : g.live_vertices()) deg.push_back(g.degree(v));
  std::sort(deg.rbegin(), deg.rend());
  std::size_t h = 0;
  while (h < deg.size() && deg[h] >= h + 1) ++h;
  return h;
}

}  // namespace

TEST(Generator, PreferentialAttachmentKeepsHSmall) {
  const std::size_t h3 = pa_h_index(3.0);
  EXPECT_LT(static_cast<double>(h3), 0.3 * std::sqrt(80000.0));
  // heavier tail, larger h
  EXPECT_GT(pa_h_index(2.25), h3);
}

TEST(Generator, RejectsBadParams) {
  GenParams p;
  p.n = 1;
  expect_error(ErrorCode::BadParams, [&] { generate_stream(p); });
  p.n = 4;
  p.target_m = 7;
  expect_error(ErrorCode::BadParams, [&] { generate_stream(p); });
  p.target_m = 2;
  p.model = GenModel::PreferentialAttachment;
  p.skew = 2.0;
  expect_error(ErrorCode::BadParams, [&] { generate_stream(p); });
  p.skew = 3.0;
  p.delete_fraction = 1.0;
  expect_error(ErrorCode::BadParams, [&] { generate_stream(p); });
  expect_error(ErrorCode::BadParams, [] { parse_model("lattice"); });
  EXPECT_EQ(parse_model("pa"), GenModel::PreferentialAttachment);
}

TEST(Runner, ApplyOpCreatesEndpoints) {
  DirectedCensus<> d;
  apply_op(d, {StreamOp::Kind::AddEdge, id(4), id(9), 1});
  EXPECT_EQ(d.graph().vertex_count(), 2u);
  QuadCensus<> q;
  apply_op(q, {StreamOp::Kind::AddEdge, id(4), id(9), 1});
  expect_error(ErrorCode::DuplicateEdge, [&] { apply_op(q, {StreamOp::Kind::AddEdge, id(9), id(4), 2}); });
  apply_op(q, {StreamOp::Kind::RemoveEdge, id(9), id(4), 3});
  expect_error(ErrorCode::MissingEdge, [&] { apply_op(q, {StreamOp::Kind::RemoveEdge, id(4), id(9), 4}); });
  expect_error(ErrorCode::UnknownVertex, [&] { apply_op(q, {StreamOp::Kind::RemoveEdge, id(1), id(4), 5}); });
}

namespace {

std::vector<StreamOp> small_stream(bool directed) {
  GenParams p;
  p.n = 12;
  p.target_m = 60;
  p.delete_fraction = 0.3;
  p.directed = directed;
  p.seed = 2;
  return generate_stream(p);
}

}  // namespace

TEST(Verify, PassesOnCorrectEngines) {
  DirectedCensus<> d;
  const auto arcs = small_stream(true);
  const auto rd = verify_stream(d, std::span<const StreamOp>(arcs), 7);
  EXPECT_TRUE(rd.passed());
  EXPECT_EQ(rd.ops, arcs.size());
  EXPECT_GE(rd.checks, arcs.size() / 7);

  QuadCensus<> q;
  const auto edges = small_stream(false);
  EXPECT_TRUE(verify_stream(q, std::span<const StreamOp>(edges), 1).passed());
}

TEST(Verify, InjectedFaultIsCaught) {
  const auto edges = small_stream(false);
  Verifier tampered(oracle::kDefaultCap, [](oracle::CensusSnapshot& s, std::size_t op) {
    if (op == 20) s.components[0].second[0] += 1;
  });
  QuadCensus<> q;
  const auto r = verify_stream(q, std::span<const StreamOp>(edges), 1, tampered);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.mismatch->op_index, 20u);
  EXPECT_EQ(r.mismatch->component, "q0");
  EXPECT_EQ(r.ops, 20u);
}

TEST(Verify, RejectsZeroInterval) {
  QuadCensus<> q;
  expect_error(ErrorCode::BadParams, [&] { verify_stream(q, std::span<const StreamOp>{}, 0); });
}

TEST(Bench, RowShape) {
  GenParams p;
  p.model = GenModel::PreferentialAttachment;
  p.n = 500;
  p.target_m = 2000;
  p.seed = 1;
  const auto ops = generate_stream(p);
  QuadCensus<> q;
  const auto row = bench_stream(q, std::span<const StreamOp>(ops), 500);
  EXPECT_EQ(row.ops, ops.size());
  EXPECT_GT(row.mean_ns_per_op, 0.0);
  EXPECT_GE(static_cast<double>(row.h_max), row.h_mean);
  EXPECT_EQ(row.final_edges, 2000u);
  EXPECT_EQ(row.final_h, q.h_index());
  EXPECT_EQ(row.dictionary_entries, q.structures().size());
}

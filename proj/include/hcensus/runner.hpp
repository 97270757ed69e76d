#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hcensus/directed_census.hpp"
#include "hcensus/oracle.hpp"
#include "hcensus/quad_census.hpp"
#include "hcensus/stream.hpp"

namespace hcensus {

enum class Mode : std::uint8_t { Directed3, Undirected4 };

inline Mode parse_mode(std::string_view name) {
  if (name == "directed3") return Mode::Directed3;
  if (name == "undirected4") return Mode::Undirected4;
  throw Error(ErrorCode::BadParams, "unknown mode '" + std::string(name) + "'");
}

inline std::string_view to_string(Mode mode) {
  return mode == Mode::Directed3 ? "directed3" : "undirected4";
}

template <class E>
concept ArcEngine = requires(E e, VertexId a) { e.insert_arc(a, a); };

template <class E>
concept EdgeEngine = requires(E e, VertexId a) { e.insert_edge(a, a); };

/// Applies one stream operation. Edge operations create missing endpoints
/// on insertion only.
template <class Engine>
void apply_op(Engine& engine, const StreamOp& op) {
  using Kind = StreamOp::Kind;
  switch (op.kind) {
    case Kind::AddVertex:
      engine.add_vertex(op.u);
      break;
    case Kind::RemoveVertex:
      engine.remove_vertex(op.u);
      break;
    case Kind::AddEdge:
      if (op.u == op.v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(op.u.value));
      engine.ensure_vertex(op.u);
      engine.ensure_vertex(op.v);
      if constexpr (ArcEngine<Engine>) {
        engine.insert_arc(op.u, op.v);
      } else {
        engine.insert_edge(op.u, op.v);
      }
      break;
    case Kind::RemoveEdge:
      if constexpr (ArcEngine<Engine>) {
        engine.delete_arc(op.u, op.v);
      } else {
        engine.delete_edge(op.u, op.v);
      }
      break;
    case Kind::Query:
      break;
  }
}

template <class Policy>
oracle::CensusSnapshot engine_snapshot(const DirectedCensus<Policy>& e) {
  oracle::CensusSnapshot s{oracle::fingerprint(e.graph()), {}};
  s.add("t", e.induced_counts());
  s.add("n", e.non_induced());
  s.add("d", e.triangles());
  return s;
}

template <class Policy>
oracle::CensusSnapshot engine_snapshot(const QuadCensus<Policy>& e) {
  oracle::CensusSnapshot s{oracle::fingerprint(e.graph()), {}};
  s.add("q", e.induced_counts());
  s.add("m", e.non_induced());
  s.add("triangles", e.triangles());
  s.add("two_paths", e.two_paths());
  return s;
}

template <class Engine>
oracle::CensusSnapshot oracle_snapshot(const Engine& e, std::size_t cap) {
  if constexpr (ArcEngine<Engine>) {
    return oracle::snapshot(e.graph(), oracle::census_directed3(e.graph(), cap));
  } else {
    return oracle::snapshot(e.graph(), oracle::census_undirected4(e.graph(), cap));
  }
}

/// Compares an engine against the oracle. The optional tamper hook edits the
/// engine snapshot before comparison (fault injection).
class Verifier {
 public:
  using Tamper = std::function<void(oracle::CensusSnapshot&, std::size_t op_index)>;

  explicit Verifier(std::size_t cap = oracle::kDefaultCap, Tamper tamper = {})
      : cap_(cap), tamper_(std::move(tamper)) {}

  template <class Engine>
  std::optional<oracle::Mismatch> check(const Engine& engine, std::size_t op_index) {
    ++checks_;
    auto got = engine_snapshot(engine);
    if (tamper_) tamper_(got, op_index);
    return oracle::diff(got, oracle_snapshot(engine, cap_), op_index);
  }

  std::size_t checks() const noexcept { return checks_; }

 private:
  std::size_t cap_;
  Tamper tamper_;
  std::size_t checks_ = 0;
};

struct VerifyOutcome {
  std::size_t ops = 0;
  std::size_t checks = 0;
  std::optional<oracle::Mismatch> mismatch;

  bool passed() const noexcept { return !mismatch.has_value(); }
};

/// Runs the stream, checking every `every` ops and after the last one.
/// Stops at the first divergence.
template <class Engine>
VerifyOutcome verify_stream(Engine& engine, std::span<const StreamOp> ops, std::size_t every,
                            Verifier verifier = Verifier{}) {
  if (every == 0) throw Error(ErrorCode::BadParams, "check interval must be positive");
  VerifyOutcome out;
  for (const auto& op : ops) {
    apply_op(engine, op);
    ++out.ops;
    if (out.ops % every == 0) {
      out.mismatch = verifier.check(engine, out.ops);
      if (out.mismatch) break;
    }
  }
  if (!out.mismatch && out.ops % every != 0) out.mismatch = verifier.check(engine, out.ops);
  out.checks = verifier.checks();
  return out;
}

struct BenchRow {
  std::size_t size = 0;
  std::size_t ops = 0;
  double mean_ns_per_op = 0;
  double h_mean = 0;
  std::size_t h_max = 0;
  double partition_moves_per_op = 0;
  std::size_t dictionary_entries = 0;
  std::size_t final_edges = 0;
  std::size_t final_h = 0;
};

template <class Engine>
std::size_t dictionary_entries(const Engine& e) {
  if constexpr (ArcEngine<Engine>) {
    return e.elbows().size();
  } else {
    return e.structures().size();
  }
}

/// Times the whole stream; h is sampled after every edge operation.
template <class Engine>
BenchRow bench_stream(Engine& engine, std::span<const StreamOp> ops, std::size_t size) {
  BenchRow row;
  row.size = size;
  double h_sum = 0;
  std::size_t samples = 0;
  std::chrono::nanoseconds elapsed{0};
  for (const auto& op : ops) {
    const auto start = std::chrono::steady_clock::now();
    apply_op(engine, op);
    elapsed += std::chrono::steady_clock::now() - start;
    ++row.ops;
    if (op.kind == StreamOp::Kind::AddEdge || op.kind == StreamOp::Kind::RemoveEdge) {
      const std::size_t h = engine.h_index();
      h_sum += static_cast<double>(h);
      row.h_max = std::max(row.h_max, h);
      ++samples;
    }
  }
  if (row.ops > 0) {
    row.mean_ns_per_op = static_cast<double>(elapsed.count()) / static_cast<double>(row.ops);
    row.partition_moves_per_op =
        static_cast<double>(engine.partition_moves()) / static_cast<double>(row.ops);
  }
  row.h_mean = samples > 0 ? h_sum / static_cast<double>(samples) : 0.0;
  row.dictionary_entries = dictionary_entries(engine);
  row.final_edges = engine.graph().adjacent_pairs();
  row.final_h = engine.h_index();
  return row;
}

}  // namespace hcensus

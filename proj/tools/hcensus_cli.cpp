#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hcensus/hcensus.hpp"

using namespace hcensus;
using nlohmann::json;

namespace {

json count_json(Count c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return to_string(c);
}

template <class Range>
json vector_json(const Range& values) {
  json out = json::array();
  for (Count c : values) out.push_back(count_json(c));
  return out;
}

struct Input {
  std::ifstream file;
  std::istream* stream = &std::cin;

  explicit Input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw Error(ErrorCode::BadParams, "cannot open '" + path + "'");
    stream = &file;
  }
};

class Reporter {
 public:
  Reporter(Mode mode, bool csv, std::ostream& out) : mode_(mode), csv_(csv), out_(out) {}

  template <class Engine>
  void emit(const Engine& e, std::size_t op_index, std::int64_t wall_ns) {
    const auto& g = e.graph();
    const std::size_t edges = mode_ == Mode::Directed3 ? g.arc_count() : g.adjacent_pairs();
    if (csv_) {
      emit_csv(e, op_index, edges, wall_ns);
      return;
    }
    json r;
    r["op_index"] = op_index;
    r["mode"] = std::string(to_string(mode_));
    r["n"] = g.vertex_count();
    r["m"] = edges;
    r["h"] = e.h_index();
    r["high"] = e.high().size();
    r["partition_moves"] = e.partition_moves();
    r["wall_ns"] = wall_ns;
    r["induced"] = vector_json(e.induced_counts());
    r["non_induced"] = vector_json(e.non_induced());
    if constexpr (ArcEngine<Engine>) {
      r["d"] = vector_json(e.triangles());
    } else {
      r["triangles"] = count_json(e.triangles());
      r["two_paths"] = count_json(e.two_paths());
    }
    out_ << r.dump() << '\n';
  }

 private:
  template <class Engine>
  void emit_csv(const Engine& e, std::size_t op_index, std::size_t edges, std::int64_t wall_ns) {
    const bool directed = mode_ == Mode::Directed3;
    const std::size_t k = directed ? kTriadClasses : kQuadClasses;
    if (!header_done_) {
      out_ << "op_index,n,m,h,high,partition_moves,wall_ns";
      for (std::size_t i = 0; i < k; ++i) out_ << ',' << (directed ? 't' : 'q') << i;
      for (std::size_t i = 0; i < k; ++i) out_ << ',' << (directed ? 'n' : 'm') << i;
      if (directed) {
        for (std::size_t i = 0; i < kTriangleClasses; ++i) out_ << ",d" << i;
      } else {
        out_ << ",triangles,two_paths";
      }
      out_ << '\n';
      header_done_ = true;
    }
    out_ << op_index << ',' << e.graph().vertex_count() << ',' << edges << ',' << e.h_index() << ','
         << e.high().size() << ',' << e.partition_moves() << ',' << wall_ns;
    for (Count c : e.induced_counts()) out_ << ',' << to_string(c);
    for (Count c : e.non_induced()) out_ << ',' << to_string(c);
    if constexpr (ArcEngine<Engine>) {
      for (Count c : e.triangles()) out_ << ',' << to_string(c);
    } else {
      out_ << ',' << to_string(e.triangles()) << ',' << to_string(e.two_paths());
    }
    out_ << '\n';
  }

  Mode mode_;
  bool csv_;
  std::ostream& out_;
  bool header_done_ = false;
};

[[noreturn]] void fail_at(const StreamOp& op, std::size_t op_index, const Error& err) {
  std::ostringstream msg;
  msg << "line " << op.line << " (op " << op_index << "): " << err.what();
  throw std::runtime_error(msg.str());
}

template <class Engine>
int do_run(Mode mode, std::istream& in, std::size_t every, bool csv) {
  Engine engine;
  Reporter reporter(mode, csv, std::cout);
  StreamReader reader(in);
  std::size_t ops = 0;
  std::size_t last_report = static_cast<std::size_t>(-1);
  const auto start = std::chrono::steady_clock::now();
  auto wall = [&] {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  };
  while (auto op = reader.next()) {
    ++ops;
    try {
      apply_op(engine, *op);
    } catch (const Error& err) {
      fail_at(*op, ops, err);
    }
    if (op->kind == StreamOp::Kind::Query || (every > 0 && ops % every == 0)) {
      reporter.emit(engine, ops, wall());
      last_report = ops;
    }
  }
  if (last_report != ops) reporter.emit(engine, ops, wall());
  return 0;
}

template <class Engine>
int do_verify(std::istream& in, std::size_t every, std::size_t cap, std::size_t fault_at) {
  if (every == 0) throw Error(ErrorCode::BadParams, "--verify-every must be positive");
  Verifier::Tamper tamper;
  if (fault_at > 0) {
    tamper = [fault_at](oracle::CensusSnapshot& s, std::size_t op_index) {
      if (op_index >= fault_at) s.components.front().second.front() += 1;
    };
  }
  Verifier verifier(cap, tamper);
  Engine engine;
  StreamReader reader(in);
  std::size_t ops = 0;
  std::optional<oracle::Mismatch> mismatch;
  while (auto op = reader.next()) {
    ++ops;
    try {
      apply_op(engine, *op);
      if (ops % every == 0) mismatch = verifier.check(engine, ops);
    } catch (const Error& err) {
      fail_at(*op, ops, err);
    }
    if (mismatch) break;
  }
  if (!mismatch && ops % every != 0) mismatch = verifier.check(engine, ops);

  json r;
  r["ops"] = ops;
  r["checks"] = verifier.checks();
  r["status"] = mismatch ? "fail" : "pass";
  if (mismatch) {
    r["op_index"] = mismatch->op_index;
    r["component"] = mismatch->component;
    r["expected"] = count_json(mismatch->expected);
    r["actual"] = count_json(mismatch->actual);
  }
  std::cout << r.dump() << '\n';
  return mismatch ? 1 : 0;
}

struct GenOptions {
  std::string model = "pa";
  std::size_t n = 1000;
  std::size_t m = 0;
  double delete_fraction = 0.0;
  double skew = 3.0;
  double reciprocity = 0.0;

  GenParams params(Mode mode, std::uint64_t seed) const {
    GenParams p;
    p.model = parse_model(model);
    p.n = n;
    p.target_m = m;
    p.delete_fraction = delete_fraction;
    p.skew = skew;
    p.seed = seed;
    p.directed = mode == Mode::Directed3;
    p.reciprocity = reciprocity;
    return p;
  }
};

void add_gen_options(CLI::App* cmd, GenOptions& g, bool with_sizes) {
  cmd->add_option("--model", g.model, "uniform | pa (preferential attachment)")->capture_default_str();
  if (!with_sizes) {
    cmd->add_option("--n", g.n, "number of vertices")->capture_default_str();
    cmd->add_option("--target-m", g.m, "number of insertions")->required();
  }
  cmd->add_option("--delete-fraction", g.delete_fraction, "share of edge ops that are removals")
      ->capture_default_str();
  cmd->add_option("--skew", g.skew, "degree exponent lambda for pa, above 2")->capture_default_str();
  cmd->add_option("--reciprocity", g.reciprocity, "directed: chance to answer a one-way arc")
      ->capture_default_str();
}

template <class Engine>
BenchRow bench_one(const std::vector<StreamOp>& ops, std::size_t size) {
  Engine engine;
  return bench_stream(engine, ops, size);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental small-subgraph census of a dynamic graph."};
  app.require_subcommand(1);

  std::string mode_name = "directed3";
  std::string format = "json";
  std::string input = "-";
  std::size_t report_every = 0;
  std::size_t verify_every = 1;
  std::size_t oracle_cap = oracle::kDefaultCap;
  std::size_t fault_at = 0;
  std::uint64_t seed = 1;
  GenOptions gen;
  std::vector<std::size_t> sizes;
  double edges_per_vertex = 4.0;

  auto mode_opt = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_name, "directed3 | undirected4")->capture_default_str();
  };

  auto* run = app.add_subcommand("run", "apply a stream and print census reports");
  mode_opt(run);
  run->add_option("input", input, "stream file, '-' for stdin")->capture_default_str();
  run->add_option("--report-every", report_every, "report every k ops (0: final only)")->capture_default_str();
  run->add_option("--format", format, "json | csv")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check the engine against brute force");
  mode_opt(verify);
  verify->add_option("input", input, "stream file, '-' for stdin")->capture_default_str();
  verify->add_option("--verify-every", verify_every, "check every k ops")->capture_default_str();
  verify->add_option("--oracle-cap", oracle_cap, "largest vertex count the oracle accepts")->capture_default_str();
  verify->add_option("--inject-fault", fault_at, "corrupt reported counts from this op on (testing)");

  auto* gencmd = app.add_subcommand("gen", "write a synthetic stream to stdout");
  mode_opt(gencmd);
  add_gen_options(gencmd, gen, false);
  gencmd->add_option("--seed", seed)->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time updates on generated streams");
  mode_opt(bench);
  add_gen_options(bench, gen, true);
  bench->add_option("--sizes", sizes, "vertex counts, one stream each")->delimiter(',')->required();
  bench->add_option("--edges-per-vertex", edges_per_vertex, "insertions per vertex")->capture_default_str();
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--format", format, "csv | json")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const Mode mode = parse_mode(mode_name);
    if (format != "json" && format != "csv") throw Error(ErrorCode::BadParams, "unknown format '" + format + "'");
    const bool directed = mode == Mode::Directed3;

    if (run->parsed()) {
      Input in(input);
      return directed ? do_run<DirectedCensus<>>(mode, *in.stream, report_every, format == "csv")
                      : do_run<QuadCensus<>>(mode, *in.stream, report_every, format == "csv");
    }
    if (verify->parsed()) {
      Input in(input);
      return directed ? do_verify<DirectedCensus<>>(*in.stream, verify_every, oracle_cap, fault_at)
                      : do_verify<QuadCensus<>>(*in.stream, verify_every, oracle_cap, fault_at);
    }
    if (gencmd->parsed()) {
      for (const auto& op : generate_stream(gen.params(mode, seed))) std::cout << hcensus::format(op) << '\n';
      return 0;
    }
    if (bench->parsed()) {
      if (!bench->count("--format")) format = "csv";
      json rows = json::array();
      if (format == "csv") std::cout << "size,ops,mean_ns_per_op,h_mean,h_max,partition_moves_per_op\n";
      for (std::size_t size : sizes) {
        GenOptions g = gen;
        g.n = size;
        g.m = static_cast<std::size_t>(edges_per_vertex * static_cast<double>(size));
        const auto ops = generate_stream(g.params(mode, seed));
        const BenchRow row = directed ? bench_one<DirectedCensus<>>(ops, size) : bench_one<QuadCensus<>>(ops, size);
        if (format == "csv") {
          std::cout << row.size << ',' << row.ops << ',' << row.mean_ns_per_op << ',' << row.h_mean << ','
                    << row.h_max << ',' << row.partition_moves_per_op << '\n';
        } else {
          rows.push_back({{"size", row.size},
                          {"ops", row.ops},
                          {"mean_ns_per_op", row.mean_ns_per_op},
                          {"h_mean", row.h_mean},
                          {"h_max", row.h_max},
                          {"partition_moves_per_op", row.partition_moves_per_op}});
        }
      }
      if (format == "json") std::cout << rows.dump(2) << '\n';
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}

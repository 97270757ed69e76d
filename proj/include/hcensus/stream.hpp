#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcensus/types.hpp"

namespace hcensus {

/// One line of an update stream:
///
///   av u      add vertex
///   rv u      remove (isolated) vertex
///   ae u v    add arc u->v, or undirected edge
///   re u v    remove it
///   q         query
///   # ...     comment
struct StreamOp {
  enum class Kind : std::uint8_t { AddVertex, RemoveVertex, AddEdge, RemoveEdge, Query };

  Kind kind = Kind::Query;
  VertexId u{};
  VertexId v{};
  std::size_t line = 0;

  friend bool operator==(const StreamOp& a, const StreamOp& b) {
    return a.kind == b.kind && a.u == b.u && a.v == b.v;
  }
};

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

[[noreturn]] inline void parse_failure(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline VertexId parse_vertex(std::string_view word, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || end != word.data() + word.size()) {
    parse_failure(line, "bad vertex id '" + std::string(word) + "'");
  }
  return VertexId{value};
}

}  // namespace detail

/// Parses one line; nullopt for blank lines and comments.
inline std::optional<StreamOp> parse_line(std::string_view text, std::size_t line) {
  if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
  const auto words = detail::split_words(text);
  if (words.empty()) return std::nullopt;

  using Kind = StreamOp::Kind;
  const std::string_view verb = words[0];
  StreamOp op;
  op.line = line;
  std::size_t operands = 0;
  if (verb == "av") {
    op.kind = Kind::AddVertex;
    operands = 1;
  } else if (verb == "rv") {
    op.kind = Kind::RemoveVertex;
    operands = 1;
  } else if (verb == "ae") {
    op.kind = Kind::AddEdge;
    operands = 2;
  } else if (verb == "re") {
    op.kind = Kind::RemoveEdge;
    operands = 2;
  } else if (verb == "q") {
    op.kind = Kind::Query;
  } else {
    detail::parse_failure(line, "unknown operation '" + std::string(verb) + "'");
  }
  if (words.size() != operands + 1) {
    detail::parse_failure(line, "'" + std::string(verb) + "' takes " + std::to_string(operands) + " operand(s)");
  }
  if (operands >= 1) op.u = detail::parse_vertex(words[1], line);
  if (operands >= 2) op.v = detail::parse_vertex(words[2], line);
  return op;
}

inline std::string format(const StreamOp& op) {
  using Kind = StreamOp::Kind;
  const auto u = std::to_string(op.u.value);
  const auto v = std::to_string(op.v.value);
  switch (op.kind) {
    case Kind::AddVertex: return "av " + u;
    case Kind::RemoveVertex: return "rv " + u;
    case Kind::AddEdge: return "ae " + u + " " + v;
    case Kind::RemoveEdge: return "re " + u + " " + v;
    case Kind::Query: break;
  }
  return "q";
}

/// Pulls operations from a text stream one line at a time.
class StreamReader {
 public:
  explicit StreamReader(std::istream& in) : in_(in) {}

  std::optional<StreamOp> next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (auto op = parse_line(text, line_)) return op;
    }
    return std::nullopt;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

inline std::vector<StreamOp> parse_stream(std::istream& in) {
  std::vector<StreamOp> ops;
  StreamReader reader(in);
  while (auto op = reader.next()) ops.push_back(*op);
  return ops;
}

}  // namespace hcensus

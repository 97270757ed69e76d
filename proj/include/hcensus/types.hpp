#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hcensus {

/// External vertex identifier as it appears in edge streams.
struct VertexId {
  std::uint64_t value = 0;

  friend constexpr bool operator==(VertexId, VertexId) = default;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Dense internal vertex index; reused after a vertex is removed.
using Vertex = std::uint32_t;

/// Census values. C(n,4) overflows 64 bits long before anything else does.
using Count = __int128;

/// State of an ordered vertex pair (u,v).
enum class PairState : std::uint8_t {
  None = 0,
  Fwd = 1,    // u->v only
  Rev = 2,    // v->u only
  Recip = 3,  // both arcs
};

constexpr PairState mirror(PairState s) noexcept {
  switch (s) {
    case PairState::Fwd: return PairState::Rev;
    case PairState::Rev: return PairState::Fwd;
    default: return s;
  }
}

constexpr bool has_forward(PairState s) noexcept {
  return s == PairState::Fwd || s == PairState::Recip;
}

constexpr bool has_reverse(PairState s) noexcept {
  return s == PairState::Rev || s == PairState::Recip;
}

enum class ErrorCode {
  DuplicateVertex,
  UnknownVertex,
  NotIsolated,
  SelfLoop,
  DuplicateArc,
  MissingArc,
  DuplicateEdge,
  MissingEdge,
  DimensionMismatch,
  GraphTooLarge,
  FingerprintMismatch,
  ParseError,
  BadParams,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::MissingArc: return "MissingArc";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string to_string(Count value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

constexpr Count choose2(Count n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr Count choose3(Count n) noexcept { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
constexpr Count choose4(Count n) noexcept {
  return n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24;
}

namespace detail {

// splitmix64 finalizer; std::hash<uint64_t> is the identity in libstdc++.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct MixHash {
  std::size_t operator()(std::uint64_t key) const noexcept {
    return static_cast<std::size_t>(mix64(key));
  }
};

constexpr std::uint64_t ordered_key(Vertex a, Vertex b) noexcept {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

constexpr std::uint64_t unordered_key(Vertex a, Vertex b) noexcept {
  return a < b ? ordered_key(a, b) : ordered_key(b, a);
}

}  // namespace detail

}  // namespace hcensus

template <>
struct std::hash<hcensus::VertexId> {
  std::size_t operator()(hcensus::VertexId id) const noexcept {
    return static_cast<std::size_t>(hcensus::detail::mix64(id.value));
  }
};

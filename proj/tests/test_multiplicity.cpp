#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "hcensus/multiplicity.hpp"
#include "support/helpers.hpp"

using namespace hcensus;
using hcensus::testing::expect_error;
using hcensus::testing::narrow;
using hcensus::testing::one_hot;

namespace {

using Arcs = std::array<std::array<bool, 3>, 3>;

PairState state_of(const Arcs& a, int x, int y) {
  return static_cast<PairState>((a[x][y] ? 1 : 0) | (a[y][x] ? 2 : 0));
}

int classify(const Arcs& a) { return classify_triple(state_of(a, 0, 1), state_of(a, 1, 2), state_of(a, 2, 0)); }

Arcs arcs_of(int mask) {
  Arcs a{};
  int bit = 0;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != y) a[x][y] = (mask >> bit++) & 1;
    }
  }
  return a;
}

// Smallest mask over all relabelings.
int canonical(int mask) {
  const Arcs a = arcs_of(mask);
  std::array<int, 3> p{0, 1, 2};
  int best = 1 << 7;
  do {
    int code = 0, bit = 0;
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        if (x != y) code |= (a[p[x]][p[y]] ? 1 : 0) << bit++;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

unsigned quad_bits(const std::array<std::array<bool, 4>, 4>& e) {
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  unsigned bits = 0;
  for (int k = 0; k < 6; ++k) bits |= (e[pairs[k][0]][pairs[k][1]] ? 1U : 0U) << k;
  return bits;
}

unsigned quad_canonical(unsigned bits) {
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::array<std::array<bool, 4>, 4> e{};
  for (int k = 0; k < 6; ++k) e[pairs[k][0]][pairs[k][1]] = e[pairs[k][1]][pairs[k][0]] = (bits >> k) & 1;
  std::array<int, 4> p{0, 1, 2, 3};
  unsigned best = 64;
  do {
    std::array<std::array<bool, 4>, 4> q{};
    for (int x = 0; x < 4; ++x) {
      for (int y = 0; y < 4; ++y) q[x][y] = e[p[x]][p[y]];
    }
    best = std::min(best, quad_bits(q));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

TEST(ClassifyTriple, Anchors) {
  EXPECT_EQ(classify_triple(PairState::None, PairState::None, PairState::None), 0);
  EXPECT_EQ(classify_triple(PairState::Recip, PairState::Recip, PairState::Recip), 15);
  EXPECT_EQ(classify_triangle(PairState::Recip, PairState::Recip, PairState::Recip), 6);
  EXPECT_EQ(classify_triple(PairState::Fwd, PairState::Fwd, PairState::None), 3);
  EXPECT_EQ(classify_triple(PairState::Recip, PairState::None, PairState::None), 2);
  EXPECT_EQ(classify_triple(PairState::Fwd, PairState::Fwd, PairState::Fwd), 8);
  EXPECT_FALSE(classify_triangle(PairState::Fwd, PairState::None, PairState::Fwd).has_value());
}

TEST(ClassifyTriple, IsomorphismClassesAreExact) {
  std::map<int, int> class_of_form;
  for (int mask = 0; mask < 64; ++mask) {
    const int form = canonical(mask);
    const int cls = classify(arcs_of(mask));
    ASSERT_GE(cls, 0);
    auto [it, inserted] = class_of_form.emplace(form, cls);
    EXPECT_EQ(it->second, cls) << "mask " << mask;
  }
  EXPECT_EQ(class_of_form.size(), 16u);
  std::set<int> classes;
  for (auto [form, cls] : class_of_form) classes.insert(cls);
  EXPECT_EQ(classes.size(), 16u);
}

TEST(ClassifyQuad, Anchors) {
  EXPECT_EQ(classify_quad(0), 0);
  EXPECT_EQ(classify_quad(63), 10);
  // 01, 12, 23, 03
  EXPECT_EQ(classify_quad(0b101101), 8);
}

TEST(ClassifyQuad, IsomorphismClassesAreExact) {
  std::map<unsigned, int> class_of_form;
  for (unsigned bits = 0; bits < 64; ++bits) {
    const int cls = classify_quad(bits);
    ASSERT_GE(cls, 0);
    auto [it, inserted] = class_of_form.emplace(quad_canonical(bits), cls);
    EXPECT_EQ(it->second, cls) << "bits " << bits;
  }
  EXPECT_EQ(class_of_form.size(), 11u);
}

// Column j of each matrix counted from scratch: subsets of the arcs of a
// T_j representative, grouped by class.
TEST(TriadMatrix, EqualsSubsetEnumeration) {
  std::array<int, 16> rep{};
  for (int mask = 63; mask >= 0; --mask) rep[classify(arcs_of(mask))] = mask;
  for (int j = 0; j < 16; ++j) {
    std::array<int, 16> column{};
    for (int sub = rep[j];; sub = (sub - 1) & rep[j]) {
      ++column[classify(arcs_of(sub))];
      if (sub == 0) break;
    }
    for (int i = 0; i < 16; ++i) EXPECT_EQ(kTriadMatrix[i][j], column[i]) << "row " << i << " col " << j;
  }
}

TEST(QuadMatrix, EqualsSubsetEnumeration) {
  std::array<unsigned, 11> rep{};
  for (int bits = 63; bits >= 0; --bits) rep[classify_quad(bits)] = bits;
  for (int j = 0; j < 11; ++j) {
    std::array<int, 11> column{};
    for (unsigned sub = rep[j];; sub = (sub - 1) & rep[j]) {
      ++column[classify_quad(sub)];
      if (sub == 0) break;
    }
    for (int i = 0; i < 11; ++i) EXPECT_EQ(kQuadMatrix[i][j], column[i]) << "row " << i << " col " << j;
  }
}

TEST(Solver, IdentityReturnsRhs) {
  const std::vector<std::vector<std::int64_t>> id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<Count> rhs = {4, -2, 9};
  EXPECT_EQ(solve_unit_upper_triangular(id3, rhs), rhs);
}

TEST(Solver, TriadColumnsSolveToOneHot) {
  for (std::size_t j = 0; j < 16; ++j) {
    std::array<Count, 16> column{};
    for (std::size_t i = 0; i < 16; ++i) column[i] = kTriadMatrix[i][j];
    EXPECT_EQ(narrow(solve_unit_upper_triangular(kTriadMatrix, column)), one_hot<16>(j)) << "column " << j;
  }
}

TEST(Solver, QuadK4Column) {
  const std::array<Count, 11> rhs = {1, 6, 12, 3, 4, 4, 12, 12, 3, 6, 1};
  EXPECT_EQ(narrow(solve_unit_upper_triangular(kQuadMatrix, rhs)), one_hot<11>(10));
  const auto rows = to_rows(kQuadMatrix);
  const auto x = solve_unit_upper_triangular(rows, rhs);
  EXPECT_EQ(x[10], 1);
}

TEST(Solver, RejectsBadShapes) {
  const std::vector<Count> rhs2 = {1, 2};
  expect_error(ErrorCode::DimensionMismatch, [&] {
    solve_unit_upper_triangular(std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}, {0, 0}}, rhs2);
  });
  expect_error(ErrorCode::DimensionMismatch, [&] {
    solve_unit_upper_triangular(std::vector<std::vector<std::int64_t>>{{2, 0}, {0, 1}}, rhs2);
  });
  expect_error(ErrorCode::DimensionMismatch, [&] {
    solve_unit_upper_triangular(std::vector<std::vector<std::int64_t>>{{1, 0}, {3, 1}}, rhs2);
  });
  expect_error(ErrorCode::DimensionMismatch, [&] {
    solve_unit_upper_triangular(std::vector<std::vector<std::int64_t>>{{1, 0}, {0, 1}}, std::vector<Count>{1});
  });
}

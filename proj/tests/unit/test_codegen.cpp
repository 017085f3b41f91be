#include "error_kind.hpp"
#include "oracles.hpp"

#include "sic/codegen.hpp"
#include "sic/error.hpp"
#include "sic/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

namespace sic {
namespace {

using test::error_kind;

std::string word(const QaryCode& c, std::size_t j) {
  std::string s;
  for (auto v : c.column(j)) s += static_cast<char>('0' + v);
  return s;
}

TEST(ReedSolomon, SmallestCodeByHand) {
  const QaryCode c = rs_extended(FiniteField(2), 2);
  ASSERT_EQ(c.t(), 4u);
  EXPECT_EQ(word(c, 0), "000");
  EXPECT_EQ(word(c, 1), "110");
  EXPECT_EQ(word(c, 2), "011");
  EXPECT_EQ(word(c, 3), "101");
  EXPECT_EQ(c.meta()->d, 2u);
}

TEST(ReedSolomon, DimensionLimits) {
  const FiniteField f(5);
  EXPECT_EQ(error_kind([&] { rs_extended(f, 1); }), ErrorKind::InvalidDimension);
  EXPECT_EQ(error_kind([&] { rs_extended(f, 7); }), ErrorKind::InvalidDimension);
  EXPECT_NO_THROW(rs_extended(f, 6));
}

TEST(ReedSolomon, SingleCodewordMatchesMaterializedCode) {
  const FiniteField f(7);
  const QaryCode c = rs_extended(f, 3);
  for (std::size_t j : {0u, 1u, 8u, 100u, 342u}) {
    const std::vector<FieldElement> msg{{static_cast<std::uint32_t>(j % 7)},
                                        {static_cast<std::uint32_t>(j / 7 % 7)},
                                        {static_cast<std::uint32_t>(j / 49)}};
    const auto cw = rs_codeword(f, msg);
    EXPECT_TRUE(std::equal(cw.begin(), cw.end(), c.column(j).begin())) << j;
  }
}

TEST(ReedSolomon, MinimumDistanceSmallCodes) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FiniteField f(q);
    for (std::uint32_t k = 2; k <= q; ++k) {
      const QaryCode c = rs_extended(f, k);
      EXPECT_EQ(test::min_pairwise_distance(c), q - k + 2) << "q=" << q << " k=" << k;
      EXPECT_EQ(test::min_nonzero_weight(c), q - k + 2);
    }
  }
}

TEST(Shortening, KeepsVanishingCodewords) {
  const FiniteField f(5);
  const QaryCode parent = rs_extended(f, 5);
  const QaryCode c = shorten(parent, 2);
  EXPECT_EQ(c.t(), 125u);
  EXPECT_EQ(c.n(), 4u);
  EXPECT_EQ(c.meta()->r, 2u);
  // The first kept codeword is the zero word; order follows the parent.
  EXPECT_EQ(word(c, 0), "0000");
  EXPECT_EQ(error_kind([&] { shorten(parent, 5); }), ErrorKind::InvalidShortening);
  const QaryCode plain(5, 2, 1, {0, 0});
  EXPECT_EQ(error_kind([&] { shorten(plain, 1); }), ErrorKind::InvalidShortening);
}

TEST(BinaryExpansion, ConstantWeightBlocks) {
  const QaryCode c = shorten(rs_extended(FiniteField(5), 5), 2);
  const BinaryCode b = binary_expand(c);
  EXPECT_EQ(b.rows(), 20u);
  EXPECT_EQ(b.cols(), 125u);
  EXPECT_EQ(b.constant_weight(), std::optional<std::size_t>(4));
  EXPECT_EQ(b.declared_weight(), std::optional<std::size_t>(4));
  for (std::size_t j = 0; j < c.t(); j += 17)
    for (std::uint32_t i = 0; i < c.n(); ++i)
      for (std::uint32_t v = 0; v < 5; ++v) EXPECT_EQ(b.get(i * 5 + v, j), c.symbol(i, j) == v);
}

struct Example {
  std::uint32_t q, k, r;
  std::size_t t, N, w;
};

class Examples : public ::testing::TestWithParam<Example> {};

TEST_P(Examples, ParametersAndCoincidence) {
  const auto& ex = GetParam();
  const QaryCode c = shorten(rs_extended(FiniteField(ex.q), ex.k), ex.r);
  const BinaryCode b = binary_expand(c);
  EXPECT_EQ(b.cols(), ex.t);
  EXPECT_EQ(b.rows(), ex.N);
  EXPECT_EQ(b.constant_weight(), std::optional<std::size_t>(ex.w));
  EXPECT_EQ(coincidence(c), ex.k - ex.r - 1);
  EXPECT_EQ(coincidence(b), ex.k - ex.r - 1);
  EXPECT_EQ(reference::coincidence(b), ex.k - ex.r - 1);
  const CodeParams p = code_params(ex.q, ex.k, ex.r);
  EXPECT_EQ(p.t, ex.t);
  EXPECT_EQ(p.N, ex.N);
  EXPECT_EQ(p.w, ex.w);
  EXPECT_EQ(p.lambda, 2u);
}

INSTANTIATE_TEST_SUITE_P(Worked, Examples,
                         ::testing::Values(Example{5, 5, 2, 125, 20, 4}, Example{7, 6, 3, 343, 35, 5},
                                           Example{8, 5, 2, 512, 56, 7}));

TEST(Condition, SizeWeightInequality) {
  EXPECT_TRUE(condition8_check(5, 5, 2, 3, 2));
  EXPECT_TRUE(condition8_check(7, 6, 3, 4, 2));
  EXPECT_TRUE(condition8_check(8, 5, 2, 6, 2));
  EXPECT_TRUE(condition8_check(8, 5, 2, 10, 3));
  EXPECT_FALSE(condition8_check(8, 5, 2, 11, 3));
  EXPECT_FALSE(condition8_check(5, 5, 2, 4, 2));
  EXPECT_EQ(error_kind([] { condition8_check(6, 3, 1, 3, 1); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(error_kind([] { condition8_check(5, 3, 1, 3, 3); }), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(error_kind([] { condition8_check(5, 3, 3, 3, 1); }), ErrorKind::ParameterOutOfRange);
}

TEST(Search, NamedCells) {
  const auto c = ks_search(2, 12);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->q, 8u);
  EXPECT_EQ(c->lambda, 3u);
  EXPECT_EQ(c->N, 56u);
  EXPECT_EQ(c->w, 7u);
  EXPECT_EQ(c->t, 4096u);
  EXPECT_LE(ks_search(8, 12)->N, 272u);
  EXPECT_FALSE(ks_search(2, 1));
}

TEST(Search, MatchesBruteForceOnSmallRange) {
  for (std::uint32_t s = 2; s <= 8; ++s)
    for (std::uint32_t m = 1; m <= 16; ++m) {
      const auto got = ks_search(s, m, 32);
      const auto want = test::brute_min_length(s, m, 32);
      ASSERT_EQ(got.has_value(), want.has_value()) << s << ' ' << m;
      if (got) {
        EXPECT_EQ(got->N, *want) << s << ' ' << m;
        EXPECT_TRUE(test::triple_feasible(s, m, {got->q, got->lambda, got->N}));
      }
    }
}

TEST(RandomCode, DeterministicAndCalibrated) {
  const BinaryCode a = random_code(40, 50, 0.3, 7);
  EXPECT_EQ(a, random_code(40, 50, 0.3, 7));
  EXPECT_NE(a, random_code(40, 50, 0.3, 8));
  std::size_t ones = 0;
  for (std::size_t j = 0; j < 50; ++j) ones += a.column_weight(j);
  EXPECT_NEAR(ones / 2000.0, 0.3, 0.05);
  EXPECT_EQ(error_kind([] { random_code(3, 3, 1.0, 1); }), ErrorKind::ParameterOutOfRange);
}

}  // namespace
}  // namespace sic

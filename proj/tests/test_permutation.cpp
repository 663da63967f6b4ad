#include <fanoquot/permutation.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fanoquot;
using fanoquot::test_support::all_permutations;
using fanoquot::test_support::random_permutation;

namespace {

using Lengths = std::vector<std::size_t>;

TEST(Compose, IdentityAndInvolution) {
  const auto id3 = Permutation::identity(3);
  EXPECT_EQ(compose(id3, id3), id3);
  const auto t = parse_cycles("(1 2)", 2);
  EXPECT_EQ(compose(t, t), Permutation::identity(2));
}

TEST(Compose, MatchesPointwiseTableOfS3) {
  // result(i) = p(q(i)), checked against every pair in S_3
  const auto s3 = all_permutations(3);
  for (const auto& p : s3)
    for (const auto& q : s3) {
      const auto pq = compose(p, q);
      for (Point i = 1; i <= 3; ++i) EXPECT_EQ(pq(i), p(q(i)));
    }
  // (1 2 3) after (1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
  EXPECT_EQ(compose(parse_cycles("(1 2 3)"), parse_cycles("(1 2)", 3)), parse_cycles("(1 3)", 3));
}

TEST(Compose, DegreeMismatchRejected) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST(Construction, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({}), std::invalid_argument);
  EXPECT_THROW(Permutation::identity(0), std::invalid_argument);
}

TEST(Inverse, ComposesToIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_permutation(9, rng);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(compose(p.inverse(), p).is_identity());
  }
}

TEST(CycleDecomposition, Examples) {
  const auto id4 = cycle_decomposition(Permutation::identity(4));
  ASSERT_EQ(id4.size(), 4u);
  for (const auto& c : id4) EXPECT_EQ(c.size(), 1u);

  const auto dt = cycle_decomposition(parse_cycles("(1 2)(3 4)", 4));
  ASSERT_EQ(dt.size(), 2u);
  EXPECT_EQ(dt[0], (Cycle{1, 2}));
  EXPECT_EQ(dt[1], (Cycle{3, 4}));
}

TEST(CycleDecomposition, RecomposesToInput) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_permutation(7, rng);
    const auto cycles = cycle_decomposition(p);
    std::size_t total = 0;
    std::set<Point> points;
    for (const auto& c : cycles) {
      total += c.size();
      points.insert(c.begin(), c.end());
    }
    EXPECT_EQ(total, 7u);
    EXPECT_EQ(points.size(), 7u);
    EXPECT_EQ(Permutation::from_cycles(7, cycles), p);
  }
}

TEST(Order, Examples) {
  EXPECT_EQ(order(Permutation::identity(5)), 1);
  EXPECT_EQ(order(parse_cycles("(1 2)(3 4 5)")), 6);
  EXPECT_EQ(order(parse_cycles("(1 2 3 4 5)")), 5);
  EXPECT_EQ(fanoquot::test_support::brute_force_order(parse_cycles("(1 2)(3 4 5)")), 6u);
  EXPECT_EQ(fanoquot::test_support::brute_force_order(parse_cycles("(1 2 3 4 5)")), 5u);
}

TEST(Order, MatchesRepeatedCompositionOnAllOfS6) {
  for (const auto& p : all_permutations(6)) {
    const auto m = order(p);
    EXPECT_EQ(m, fanoquot::test_support::brute_force_order(p)) << format_cycles(p);
    const auto mi = m.convert_to<long long>();
    EXPECT_TRUE(power(p, mi).is_identity());
    for (long long j = 1; j < mi; ++j) EXPECT_FALSE(power(p, j).is_identity());
  }
}

TEST(CycleTypeTest, Examples) {
  EXPECT_EQ(cycle_type(parse_cycles("(1 2)(3 4)", 5)).lengths, (Lengths{2, 2, 1}));
  EXPECT_EQ(cycle_type(Permutation::identity(3)).lengths, (Lengths{1, 1, 1}));
  EXPECT_EQ(cycle_type(parse_cycles("(1 2 3)(4 5 6 7)", 8)).lengths, (Lengths{4, 3, 1}));
  EXPECT_EQ(format_cycle_type(cycle_type(parse_cycles("(1 2)(3 4)", 7))), "[2^2,1^3]");
  EXPECT_EQ(format_cycle_type(cycle_type(parse_cycles("(1 2 3)(4 5 6 7)", 8))), "[4,3,1]");
}

TEST(CycleTypeTest, SumsToDegreeAndGivesOrder) {
  for (const auto& p : all_permutations(5)) {
    const auto t = cycle_type(p);
    std::size_t sum = 0;
    for (auto len : t.lengths) sum += len;
    EXPECT_EQ(sum, 5u);
    EXPECT_EQ(t.order(), order(p));
  }
}

TEST(CycleTypeTest, ConjugationInvariantInS7) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_permutation(7, rng);
    const auto q = random_permutation(7, rng);
    EXPECT_EQ(cycle_type(q * p * q.inverse()), cycle_type(p));
  }
}

TEST(ForbiddenType, Examples) {
  EXPECT_TRUE(is_forbidden_type(parse_cycles("(2 5)", 6)));
  EXPECT_TRUE(is_forbidden_type(parse_cycles("(4 6 1)", 7)));
  EXPECT_TRUE(is_forbidden_type(parse_cycles("(1 5)(2 3)", 5)));
  EXPECT_FALSE(is_forbidden_type(Permutation::identity(4)));
  EXPECT_FALSE(is_forbidden_type(parse_cycles("(1 2)(3 4)(5 6)", 6)));
  EXPECT_FALSE(is_forbidden_type(parse_cycles("(1 2 3 4)", 4)));
  EXPECT_FALSE(is_forbidden_type(parse_cycles("(1 2)(3 4 5)", 5)));
}

TEST(CycleNotation, Parse) {
  const auto t = parse_cycles("(1 2)", 4);
  EXPECT_EQ(t.degree(), 4u);
  EXPECT_EQ(t(1), 2u);
  EXPECT_EQ(t(2), 1u);
  EXPECT_EQ(t(3), 3u);
  EXPECT_EQ(t(4), 4u);
  EXPECT_EQ(parse_cycles("()", 3), Permutation::identity(3));
  EXPECT_EQ(parse_cycles(" id ", 3), Permutation::identity(3));
  EXPECT_EQ(parse_cycles("  ( 1 ,2, 3 ) (4 5)"), parse_cycles("(1 2 3)(4 5)"));
  EXPECT_EQ(parse_cycles("(1 2 3)").degree(), 3u);
}

TEST(CycleNotation, Errors) {
  EXPECT_THROW(parse_cycles("(1 2 2)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 5)", 4), ParseError);
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("1 2)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 a)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(0 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("", 3), ParseError);
  try {
    parse_cycles("(1 2 2)", 3);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  try {
    parse_cycles("(1 2", 3);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(CycleNotation, RoundTripOnRandomPermutations) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto p = random_permutation(n, rng);
    EXPECT_EQ(parse_cycles(format_cycles(p), n), p);
  }
  EXPECT_EQ(format_cycles(Permutation::identity(3)), "()");
  EXPECT_EQ(format_cycles(parse_cycles("(3 1 2)(5 4)", 6)), "(1 2 3)(4 5)");
}

}  // namespace

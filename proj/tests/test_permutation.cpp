#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hgs/permutation.hpp"

namespace hgs {
namespace {

Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<point_t> v(n);
  std::iota(v.begin(), v.end(), point_t{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

// Order by brute repeated composition, independent of the cycle-length lcm.
std::uint64_t order_by_iteration(const Permutation& p) {
  Permutation x = p;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = compose(x, p);
    ++k;
  }
  return k;
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<point_t>{0, 0, 1}), Error);
  EXPECT_THROW(Permutation(std::vector<point_t>{0, 3, 1}), Error);
  EXPECT_THROW(Permutation(std::vector<point_t>{}), Error);
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  auto p = Permutation::from_cycles(3, {{0, 1}});
  auto q = Permutation::from_cycles(3, {{1, 2}});
  auto r = compose(p, q);
  // hand table: 0 -q-> 0 -p-> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
  EXPECT_EQ(r, Permutation(std::vector<point_t>{1, 2, 0}));
}

TEST(Permutation, ComposeDegreeMismatch) {
  try {
    compose(Permutation::identity(3), Permutation::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degree_mismatch);
  }
}

TEST(Permutation, InverseOfLongCycle) {
  std::vector<point_t> cyc(27);
  std::iota(cyc.begin(), cyc.end(), point_t{0});
  auto c = Permutation::from_cycles(27, {cyc});
  auto ci = inverse(c);
  EXPECT_EQ(ci(0), 26);
  EXPECT_EQ(ci(26), 25);
  EXPECT_TRUE(compose(c, ci).is_identity());
  EXPECT_EQ(element_order(c), 27u);
}

TEST(Permutation, ThreeNineCyclesHaveOrderNine) {
  std::vector<std::vector<point_t>> cycles(3);
  for (point_t i = 0; i < 27; ++i) cycles[i / 9].push_back(i);
  auto p = Permutation::from_cycles(27, cycles);
  EXPECT_EQ(element_order(p), 9u);
  EXPECT_EQ(order_by_iteration(p), 9u);
  EXPECT_EQ(cycle_type(p), (std::vector<std::size_t>{9, 9, 9}));
}

TEST(Permutation, CycleTypeOfIdentity) {
  EXPECT_EQ(cycle_type(Permutation::identity(9)), std::vector<std::size_t>(9, 1));
}

TEST(Permutation, PowerMatchesRepeatedComposition) {
  std::mt19937 rng(7);
  auto p = random_permutation(12, rng);
  Permutation acc = Permutation::identity(12);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(power(p, k), acc);
    acc = compose(acc, p);
  }
  EXPECT_EQ(power(p, -1), inverse(p));
}

TEST(Permutation, CycleStringRoundTrip) {
  auto p = parse_cycles("(1,2,3)(4,5)", 6);
  EXPECT_EQ(to_cycle_string(p), "(1,2,3)(4,5)");
  EXPECT_EQ(p(5), 5);
  EXPECT_EQ(to_cycle_string(Permutation::identity(4)), "()");
  EXPECT_THROW(parse_cycles("(1,2,1)", 3), Error);
  EXPECT_THROW(parse_cycles("(1,2", 3), Error);
  EXPECT_THROW(parse_cycles("(0,1)", 3), Error);
  EXPECT_THROW(parse_cycles("(1,7)", 3), Error);
}

class PermutationProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(PermutationProperty, GroupLaws) {
  std::mt19937 rng(GetParam());
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng() % 40;
    auto p = random_permutation(n, rng);
    auto q = random_permutation(n, rng);
    auto r = random_permutation(n, rng);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_EQ(inverse(inverse(p)), p);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_EQ(element_order(p), order_by_iteration(p));
    auto ct = cycle_type(p);
    EXPECT_EQ(std::accumulate(ct.begin(), ct.end(), std::size_t{0}), n);
    EXPECT_EQ(parse_cycles(to_cycle_string(p), n), p);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PermutationProperty, ::testing::Values(1u, 2u, 3u, 4u));

}  // namespace
}  // namespace hgs

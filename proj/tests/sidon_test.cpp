#include <gtest/gtest.h>

#include <set>

#include "witsen/random_instances.hpp"
#include "witsen/sidon.hpp"

namespace witsen {
namespace {

std::vector<Int> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

TEST(IsSidon, WorkedExamples) {
  EXPECT_TRUE(is_sidon(ints({1, 2, 4}), 2));
  EXPECT_FALSE(is_sidon(ints({1, 2, 3, 4}), 2));  // 3 + 3 = 4 + 2
}

TEST(IsSidon, OrderFourOnPair) {
  // Multiset sums of size 4 over {1, 2}: 4, 5, 6, 7, 8.
  std::set<long long> sums;
  for (int ones = 0; ones <= 4; ++ones) sums.insert(ones * 1 + (4 - ones) * 2);
  EXPECT_EQ(sums.size(), 5u);
  EXPECT_TRUE(is_sidon(ints({1, 2}), 4));
}

TEST(IsSidon, EdgeCases) {
  EXPECT_TRUE(is_sidon(std::vector<Int>{}, 4));
  EXPECT_TRUE(is_sidon(ints({7}), 3));
  EXPECT_TRUE(is_sidon(ints({1, 2, 3}), 1));
  EXPECT_THROW(is_sidon(ints({1, 1}), 2), Error);
  EXPECT_THROW(is_sidon(ints({1, 2}), 0), Error);
  // 1 + 4 = 2 + 3 breaks order 2 but not order 1.
  EXPECT_FALSE(is_sidon(ints({1, 2, 3, 4}), 2));
  EXPECT_TRUE(is_sidon(ints({1, 2, 5, 11}), 2));
}

// Greedy extension by full is_sidon rechecks.
std::optional<long long> brute_extension(const std::vector<long long>& set, long long lo, long long hi) {
  for (long long v = lo; v <= hi; ++v) {
    std::vector<Int> candidate(set.begin(), set.end());
    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
    candidate.emplace_back(v);
    if (is_sidon(candidate, 4)) return v;
  }
  return std::nullopt;
}

TEST(SidonExtension, MatchesFullRecheck) {
  // Small ranges where many candidates are rejected.
  std::vector<long long> set{1};
  for (int step = 0; step < 5; ++step) {
    auto fast = smallest_sidon_extension(std::vector<std::int64_t>(set.begin(), set.end()), 1, 5000);
    auto brute = brute_extension(set, 1, 5000);
    ASSERT_TRUE(fast && brute);
    EXPECT_EQ(*fast, *brute) << "step " << step;
    set.push_back(*brute);
  }
  EXPECT_GT(set.back(), set[set.size() - 2] + 1);  // some candidates were rejected
}

TEST(SidonExtension, RandomBasesAgree) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long long> set;
    auto first = brute_extension({}, rng.uniform(1, 30), 1000);
    set.push_back(*first);
    int size = static_cast<int>(rng.uniform(1, 3));
    while (static_cast<int>(set.size()) < size) set.push_back(*brute_extension(set, 1, 2000));
    long long lo = rng.uniform(1, 200), hi = lo + rng.uniform(0, 400);
    auto fast = smallest_sidon_extension(std::vector<std::int64_t>(set.begin(), set.end()), lo, hi);
    auto brute = brute_extension(set, lo, hi);
    EXPECT_EQ(fast.has_value(), brute.has_value());
    if (fast && brute) EXPECT_EQ(*fast, *brute);
  }
}

TEST(ConstructSidon, SmallCases) {
  EXPECT_EQ(construct_sidon(1).elements, ints({1}));
  // First candidate in (20, 5120] that keeps the order-4 property.
  auto brute = brute_extension({1}, 21, 5120);
  ASSERT_TRUE(brute);
  EXPECT_EQ(*brute, 21);
  EXPECT_EQ(construct_sidon(2).elements, ints({1, 21}));
}

TEST(ConstructSidon, SizeRangeAndProperty) {
  for (int k = 1; k <= 8; ++k) {
    SidonSet s = construct_sidon(k);
    Int bound = 20;
    for (int i = 0; i < 8; ++i) bound *= k;
    EXPECT_EQ(static_cast<int>(s.elements.size()), k);
    EXPECT_LE(s.elements.back(), bound);
    EXPECT_TRUE(std::is_sorted(s.elements.begin(), s.elements.end()));
    EXPECT_TRUE(is_sidon(s.elements, 4)) << "k=" << k;
    EXPECT_EQ(s.order, 4);
  }
}

TEST(ConstructSidon, PrefixAndDeterminism) {
  SidonSet prev = construct_sidon(1);
  for (int k = 2; k <= 9; ++k) {
    SidonSet cur = construct_sidon(k);
    EXPECT_EQ(cur, construct_sidon(k));
    ASSERT_EQ(cur.elements.size(), prev.elements.size() + 1);
    EXPECT_TRUE(std::equal(prev.elements.begin(), prev.elements.end(), cur.elements.begin()));
    prev = cur;
  }
}

TEST(ConstructSidon, ScalingPreservesOrderFour) {
  SidonSet s = construct_sidon(6);
  for (long long f : {2, 3, 16, 36, 1000003}) EXPECT_TRUE(is_sidon(scale(s, f)));
  EXPECT_THROW(scale(s, 0), Error);
}

TEST(ConstructSidon, RejectsBadSizes) {
  EXPECT_THROW(construct_sidon(0), Error);
  try {
    construct_sidon(kMaxSidonSize + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

}  // namespace
}  // namespace witsen

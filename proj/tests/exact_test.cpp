#include <gtest/gtest.h>

#include "test_util.hpp"
#include "witsen/exact.hpp"
#include "witsen/random_instances.hpp"
#include "witsen/reduction.hpp"

namespace witsen {
namespace {

using testing::make_instance;

struct BruteOptimum {
  Rational cost;
  TransportMap t;
};

// Every T with |T(x) - x| <= radius, second stage from optimal_second_stage,
// cost from the written-out double sum; first strict minimum wins.
BruteOptimum brute_optimum(const Instance& inst, int radius) {
  const auto support = inst.x0.support();
  const std::size_t n = support.size();
  std::vector<int> off(n, -radius);
  BruteOptimum best{-1, {}};
  while (true) {
    TransportMap t;
    for (std::size_t i = 0; i < n; ++i) t.entries.emplace(support[i], support[i] + off[i]);
    Rational c = testing::brute_total(inst, t, optimal_second_stage(inst, t));
    if (best.cost < 0 || c < best.cost) best = {c, t};
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (off[i] < radius) {
        ++off[i];
        break;
      }
      off[i] = -radius;
      if (i == 0) return best;
    }
  }
}

TEST(ExactOptimum, TwoPointExample) {
  Instance inst = make_instance({0, 1}, {0, 1}, 100);
  ExactResult r = exact_optimum(inst);
  EXPECT_EQ(r.cost.total, Rational(1, 2));
  EXPECT_EQ(r.upper_bound, Rational(1, 2));
  EXPECT_EQ(r.window, (std::vector<Int>{1, 1}));
  EXPECT_EQ(r.explored, 9u);
  EXPECT_EQ(r.strategy.t.at(0), -1);
  EXPECT_EQ(r.strategy.t.at(1), 1);

  BruteOptimum b = brute_optimum(inst, 3);
  EXPECT_EQ(b.cost, Rational(1, 2));
}

TEST(ExactOptimum, Trivial) {
  EXPECT_EQ(exact_optimum(make_instance({4}, {0, 9}, 7)).cost.total, 0);
  EXPECT_EQ(exact_optimum(make_instance({1, 2, 3}, {0}, 7)).cost.total, 0);
}

TEST(ExactOptimum, K2ReductionMatchesL2) {
  ReductionOutput r = graph_to_instance(Graph(2, {{1, 2}}));
  ExactResult e = exact_optimum(r.instance);
  EXPECT_EQ(e.cost.total, Rational(1, 2));
  EXPECT_EQ(e.cost.total, l2_chromatic_bruteforce(r.graph).gamma_star);
  EXPECT_EQ(e.strategy.t.at(16), 15);
  EXPECT_EQ(e.strategy.t.at(336), 336);
}

TEST(ExactOptimum, MatchesWideEnumeration) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_small_instance(rng, 3, 3);
    ExactResult e = exact_optimum(inst);
    Int w = 0;
    for (const auto& v : e.window) w = std::max(w, v);
    if (w > 4) continue;
    BruteOptimum b = brute_optimum(inst, static_cast<int>(w) + 2);
    EXPECT_EQ(e.cost.total, b.cost);
    EXPECT_LE(e.cost.total, algorithm1(inst).cost.total);
    EXPECT_EQ(e.cost, evaluate_cost(inst, e.strategy));
  }
}

TEST(ExactOptimum, WideningDoesNotChangeOptimum) {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = random_small_instance(rng, 3, 2);
    ExactOptions wide;
    wide.widen = 1;
    try {
      EXPECT_EQ(exact_optimum(inst).cost.total, exact_optimum(inst, wide).cost.total);
    } catch (const BudgetExceeded&) {
    }
  }
}

TEST(ExactOptimum, BudgetExceeded) {
  Instance inst = make_instance({0, 1, 2, 3}, {0, 1}, 1000);
  ExactOptions tiny;
  tiny.budget = 10;
  try {
    exact_optimum(inst, tiny);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    EXPECT_GT(e.size(), 10);
  }
}

TEST(ExactOptimum, KernelWidthsAgree) {
  // Large K pushes the scaled magnitudes past 64 bits.
  Instance inst(testing::uniform({0, 1, 3}), testing::uniform({-1, 2}), Rational(Int(1) << 70, 3));
  ExactResult e = exact_optimum(inst);
  EXPECT_EQ(e.cost.total, brute_optimum(inst, static_cast<int>(*std::max_element(e.window.begin(), e.window.end()))).cost);
}

TEST(ReductionCap, Values) {
  EXPECT_EQ(reduction_displacement_cap(2), 2);
  EXPECT_EQ(reduction_displacement_cap(4), 8);
  EXPECT_EQ(reduction_displacement_cap(5), 11);
}

}  // namespace
}  // namespace witsen

#pragma once

// Polynomial-time approximation within a factor |X|^3 |Z|^4 of optimal.
//
// For each k = 0..n the k most probable atoms stay fixed and the rest are
// moved, one at a time in rank order, to the nearest integer that creates no
// collision with any atom placed before it. The cheapest of the n + 1
// candidate strategies is returned.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "witsen/core.hpp"

namespace witsen {

/// Probability descending, ties by ascending value.
inline std::vector<Atom> rank_atoms(const ProbMass& x0) {
  std::vector<Atom> ranked = x0.atoms();
  std::stable_sort(ranked.begin(), ranked.end(), [](const Atom& a, const Atom& b) {
    if (a.prob != b.prob) return a.prob > b.prob;
    return a.value < b.value;
  });
  return ranked;
}

/// |X| * |Z|^2, the largest displacement collision_free_transport may need.
inline Int displacement_bound(const Instance& inst) {
  Int zs = static_cast<long long>(inst.z.size());
  return Int(static_cast<long long>(inst.x0.size())) * zs * zs;
}

/// Differences z_b - z_a over all pairs in supp(Z).
inline std::set<Int> noise_differences(const ProbMass& z) {
  std::set<Int> out;
  for (const auto& a : z.atoms())
    for (const auto& b : z.atoms()) out.insert(b.value - a.value);
  return out;
}

inline TransportMap collision_free_transport(const Instance& inst, std::size_t fixed) {
  const auto ranked = rank_atoms(inst.x0);
  if (fixed > ranked.size()) throw Error(ErrorKind::InvalidArgument, "cannot fix more atoms than the support holds");
  const auto diffs = noise_differences(inst.z);

  TransportMap t;
  std::vector<Int> placed;
  for (std::size_t m = 0; m < ranked.size(); ++m) {
    const Int& x = ranked[m].value;
    Int target = x;
    if (m >= fixed) {
      // T(x_m) must avoid T(x_j) + z_b - z_a for every earlier j.
      std::set<Int> forbidden;
      for (const auto& tj : placed)
        for (const auto& d : diffs) forbidden.insert(tj + d);
      for (Int dist = 0;; ++dist) {
        if (!forbidden.count(x - dist)) {
          target = x - dist;
          break;
        }
        if (!forbidden.count(x + dist)) {
          target = x + dist;
          break;
        }
      }
    }
    t.entries.emplace(x, target);
    placed.push_back(target);
  }
  return t;
}

struct ApproxResult {
  std::size_t best_k = 0;
  Strategy strategy;
  CostBreakdown cost;
  std::vector<std::pair<std::size_t, Rational>> per_k_costs;
};

/// Runs every k = 0..n; cost ties go to the larger k.
inline ApproxResult algorithm1(const Instance& inst) {
  ApproxResult best;
  bool have = false;
  for (std::size_t k = 0; k <= inst.x0.size(); ++k) {
    TransportMap t = collision_free_transport(inst, k);
    SecondStageMap d = optimal_second_stage(inst, t);
    CostBreakdown c = evaluate_cost(inst, t, d);
    best.per_k_costs.emplace_back(k, c.total);
    if (!have || c.total <= best.cost.total) {
      best.best_k = k;
      best.strategy = {std::move(t), std::move(d)};
      best.cost = std::move(c);
      have = true;
    }
  }
  return best;
}

}  // namespace witsen

#pragma once

// Graph -> discrete Witsenhausen reduction and the coloring oracles behind it.
//
// A graph G on n vertices becomes the instance with X0 uniform on
// x_i = l * y_i ({y_i} an order-4 Sidon set, l = 4 (ceil(n^1.5) + 1)),
// Z uniform on the half-differences (x_i - x_j) / 2 over edges in both
// orientations, and K = n^5 + 1. Its optimal cost equals the
// l2-chromatic number gamma* = min (1/n) sum gamma(i)^2 over proper integer
// colorings gamma.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "witsen/core.hpp"
#include "witsen/detail/fault_injection.hpp"
#include "witsen/graph.hpp"
#include "witsen/sidon.hpp"

namespace witsen {

struct ReductionOutput {
  Graph graph;
  Instance instance;
  std::vector<Int> x_values;  // x_values[i - 1] belongs to vertex i
  Int scale;
  SidonSet sidon_base;
};

inline Int reduction_scale(int n) { return 4 * (ceil_pow_three_halves(Int(n)) + 1) + WITSEN_FAULT_SCALE; }

inline Rational reduction_weight(int n) {
  Int nn = n;
  return Rational(nn * nn * nn * nn * nn + 1 + WITSEN_FAULT_WEIGHT);
}

/// Builds the reduction from explicit parameters. graph_to_instance() is the
/// canonical choice; this entry point exists for auditing altered parameters.
inline ReductionOutput build_reduction(const Graph& g, const SidonSet& base, const Int& scale, const Rational& k) {
  if (g.edges().empty()) throw Error(ErrorKind::EmptyEdgeSet, "reduction needs at least one edge");
  if (static_cast<int>(base.elements.size()) != g.n())
    throw Error(ErrorKind::InvalidArgument, "Sidon base size must equal the vertex count");

  std::vector<Int> xs;
  for (const auto& y : base.elements) xs.push_back(scale * y);

  std::set<Int> halves;
  for (auto [i, j] : g.edges()) {
    Int diff = xs[i - 1] - xs[j - 1];
    if (diff % 2 != 0) throw Error(ErrorKind::InvalidArgument, "edge difference is odd; scale must be even");
    halves.insert(diff / 2);
    halves.insert(-diff / 2);
  }
  if (halves.size() != 2 * g.edges().size())
    throw Error(ErrorKind::Internal, "edge half-differences are not distinct (" + std::to_string(halves.size()) +
                                         " values for " + std::to_string(g.edges().size()) + " edges)");

  std::vector<Int> zs(halves.begin(), halves.end());
  Instance inst(ProbMass::uniform(xs), ProbMass::uniform(zs), k);
  return {g, std::move(inst), std::move(xs), scale, base};
}

inline ReductionOutput graph_to_instance(const Graph& g) {
  if (g.edges().empty()) throw Error(ErrorKind::EmptyEdgeSet, "reduction needs at least one edge");
  return build_reduction(g, construct_sidon(g.n()), reduction_scale(g.n()), reduction_weight(g.n()));
}

struct L2ChromaticResult {
  Rational gamma_star;
  Coloring witness;
};

struct OracleLimits {
  int max_vertices = 6;
  // Color window half-width; negative means ceil(n / 2).
  int window = -1;
};

/// Exhaustive minimum of (1/n) sum gamma(i)^2 over proper colorings with
/// values in [-w, w], w = ceil(n/2) by default. Optimal colorings occupy an
/// interval of at most n consecutive integers around zero, so this window is
/// complete. The witness is the lexicographically smallest optimum.
inline L2ChromaticResult l2_chromatic_bruteforce(const Graph& g, const OracleLimits& limits = {}) {
  const int n = g.n();
  if (n > limits.max_vertices)
    throw Error(ErrorKind::TooLarge, "l2-chromatic brute force limited to " + std::to_string(limits.max_vertices) +
                                         " vertices");
  if (n == 0) return {0, {}};
  const int w = limits.window >= 0 ? limits.window : (n + 1) / 2;

  std::vector<int> gamma(n), best;
  long long best_sum = std::numeric_limits<long long>::max();

  // Depth-first in lexicographic order; partial sums only grow, so a prefix
  // that cannot strictly improve is cut.
  auto search = [&](auto&& self, int v, long long sum) -> void {
    if (sum >= best_sum) return;
    if (v == n) {
      best_sum = sum;
      best = gamma;
      return;
    }
    for (int c = -w; c <= w; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (gamma[u] == c && g.adjacent(u + 1, v + 1)) ok = false;
      if (!ok) continue;
      gamma[v] = c;
      self(self, v + 1, sum + static_cast<long long>(c) * c);
    }
  };
  search(search, 0, 0);
  if (best.empty()) throw Error(ErrorKind::Internal, "no proper coloring inside the color window");

  Coloring witness;
  for (int c : best) witness.gamma.emplace_back(c);
  return {Rational(best_sum, n), std::move(witness)};
}

inline int chromatic_bruteforce(const Graph& g, const OracleLimits& limits = {}) {
  const int n = g.n();
  if (n > limits.max_vertices)
    throw Error(ErrorKind::TooLarge, "chromatic brute force limited to " + std::to_string(limits.max_vertices) +
                                         " vertices");
  if (n == 0) return 0;

  std::vector<int> color(n, -1);
  auto colorable = [&](auto&& self, int v, int colors) -> bool {
    if (v == n) return true;
    for (int c = 0; c < colors; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (color[u] == c && g.adjacent(u + 1, v + 1)) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, colors)) return true;
    }
    return false;
  };
  for (int colors = 1; colors <= n; ++colors)
    if (colorable(colorable, 0, colors)) return colors;
  throw Error(ErrorKind::Internal, "graph not n-colorable");
}

struct SandwichCheck {
  int kappa;
  Rational gamma_star;
  bool upper_holds;  // kappa^2 >= gamma*
  bool lower_holds;  // 12 n gamma* >= (kappa - 2)^3
  bool holds() const { return upper_holds && lower_holds; }
};

inline SandwichCheck chromatic_sandwich(const Graph& g, const OracleLimits& limits = {}) {
  SandwichCheck s;
  s.kappa = chromatic_bruteforce(g, limits);
  s.gamma_star = l2_chromatic_bruteforce(g, limits).gamma_star;
  Int kappa = s.kappa;
  Int km2 = kappa - 2;
  s.upper_holds = Rational(kappa * kappa) >= s.gamma_star;
  s.lower_holds = Rational(12 * g.n()) * s.gamma_star >= Rational(km2 * km2 * km2);
  return s;
}

inline bool check_chromatic_sandwich(const Graph& g, const OracleLimits& limits = {}) {
  return chromatic_sandwich(g, limits).holds();
}

inline Rational reduction_cost_limit(const ReductionOutput& r) {
  Int n = static_cast<long long>(r.x_values.size());
  return Rational(n * n);
}

/// T(x_i) = x_i + gamma(i) with its least-squares second stage.
inline Strategy coloring_to_strategy(const ReductionOutput& r, const Coloring& c) {
  if (!is_proper(r.graph, c)) throw Error(ErrorKind::ImproperColoring, "coloring is not proper for the source graph");
  if (coloring_score(c) > reduction_cost_limit(r))
    throw Error(ErrorKind::CostTooHigh, "coloring score " + to_string(coloring_score(c)) + " exceeds n^2");

  Strategy s;
  for (std::size_t i = 0; i < r.x_values.size(); ++i)
    s.t.entries.emplace(r.x_values[i], r.x_values[i] + c.gamma[i]);
  s.delta = optimal_second_stage(r.instance, s.t);
  return s;
}

/// gamma(i) = T(x_i) - x_i. Requires the cost of T (with optimal second
/// stage) to be at most n^2, which forces the coloring to be proper.
inline Coloring strategy_to_coloring(const ReductionOutput& r, const TransportMap& t) {
  CostBreakdown c = evaluate_transport(r.instance, t);
  if (c.total > reduction_cost_limit(r))
    throw Error(ErrorKind::CostTooHigh, "strategy cost " + to_string(c.total) + " exceeds n^2");
  Coloring out;
  for (const auto& x : r.x_values) out.gamma.push_back(t.at(x) - x);
  return out;
}

}  // namespace witsen

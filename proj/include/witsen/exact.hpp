#pragma once

// Exhaustive exact solver for small instances.
//
// A feasible strategy of cost UB (from algorithm1) bounds the search: an atom
// x of probability p moved by more than w(x) = floor(sqrt(UB / p)) already
// pays more than UB in first-stage cost alone. Every transport map inside
// these per-atom windows is paired with its least-squares second stage and
// evaluated exactly.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "witsen/approx.hpp"
#include "witsen/core.hpp"
#include "witsen/detail/scaled_cost.hpp"

namespace witsen {

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(Int size, std::uint64_t budget)
      : Error(ErrorKind::BudgetExceeded,
              "search space of " + size.str() + " transport maps exceeds budget " + std::to_string(budget)),
        size_(std::move(size)) {}

  const Int& size() const noexcept { return size_; }

 private:
  Int size_;
};

struct ExactOptions {
  std::uint64_t budget = 20'000'000;
  // Extra per-atom cap, valid only when a caller can certify it.
  std::optional<Int> displacement_cap;
  // Added to every window after capping; used to audit window completeness.
  Int widen = 0;
};

struct ExactResult {
  Strategy strategy;
  CostBreakdown cost;
  Rational upper_bound;
  std::vector<Int> window;  // per atom, ascending support order
  std::uint64_t explored = 0;
};

/// floor(n * sqrt(n)): on a reduction instance any larger displacement of a
/// single atom (probability 1/n) costs more than n^2, which a proper coloring
/// with distinct colors already beats.
inline Int reduction_displacement_cap(int n) {
  Int nn = n;
  return isqrt(nn * nn * nn);
}

inline std::vector<Int> displacement_windows(const Instance& inst, const Rational& upper_bound,
                                             const ExactOptions& opts = {}) {
  std::vector<Int> w;
  for (const auto& a : inst.x0.atoms()) {
    Int v = floor_sqrt(upper_bound / a.prob);
    if (opts.displacement_cap && *opts.displacement_cap < v) v = *opts.displacement_cap;
    w.push_back(v + opts.widen);
  }
  return w;
}

inline Int search_space_size(const std::vector<Int>& window) {
  Int size = 1;
  for (const auto& w : window) size *= 2 * w + 1;
  return size;
}

namespace detail {

// Odometer over offsets, first atom most significant, offsets ascending; a
// strictly better map replaces the incumbent, so the lexicographically
// smallest optimal T wins.
template <typename I>
std::vector<I> enumerate_windows(const ScaledInstance& s, const std::vector<Int>& window, std::uint64_t& explored) {
  const std::size_t n = s.xs.size();
  TransportEvaluator<I> eval(s);
  std::vector<I> lo(n), hi(n), t(n), best_t;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = static_cast<I>(s.xs[i] - window[i]);
    hi[i] = static_cast<I>(s.xs[i] + window[i]);
    t[i] = lo[i];
  }
  I best{};
  bool have = false;
  explored = 0;
  while (true) {
    I value = eval.scaled_total(t);
    ++explored;
    if (!have || value < best) {
      best = value;
      best_t = t;
      have = true;
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (t[i] < hi[i]) {
        ++t[i];
        break;
      }
      t[i] = lo[i];
      if (i == 0) return best_t;
    }
  }
}

}  // namespace detail

inline ExactResult exact_optimum(const Instance& inst, const ExactOptions& opts = {}) {
  ExactResult out;
  out.upper_bound = algorithm1(inst).cost.total;
  out.window = displacement_windows(inst, out.upper_bound, opts);

  Int size = search_space_size(out.window);
  if (size > opts.budget) throw BudgetExceeded(size, opts.budget);

  detail::ScaledInstance scaled(inst);
  Int max_abs_t = 0, max_move = 0;
  for (std::size_t i = 0; i < scaled.xs.size(); ++i) {
    max_abs_t = std::max(max_abs_t, Int(abs(scaled.xs[i]) + out.window[i]));
    max_move = std::max(max_move, out.window[i]);
  }
  Int bound = scaled.magnitude_bound(max_abs_t, max_move);

  std::vector<Int> best_t;
  if (bound < (Int(1) << 62)) {
    for (auto v : detail::enumerate_windows<std::int64_t>(scaled, out.window, out.explored)) best_t.emplace_back(v);
  } else if (bound < (Int(1) << 125)) {
    for (auto v : detail::enumerate_windows<__int128>(scaled, out.window, out.explored)) best_t.emplace_back(v);
  } else {
    best_t = detail::enumerate_windows<Int>(scaled, out.window, out.explored);
  }

  for (std::size_t i = 0; i < scaled.xs.size(); ++i) out.strategy.t.entries.emplace(scaled.xs[i], best_t[i]);
  out.strategy.delta = optimal_second_stage(inst, out.strategy.t);
  out.cost = evaluate_cost(inst, out.strategy);
  return out;
}

}  // namespace witsen

#pragma once

// Discrete Witsenhausen problem: distributions, strategies and exact cost.
//
// The cost of a strategy (T, delta) on an instance (X0, Z, K) is
//
//     E[(T(X0) - X0)^2] + K * E[(T(X0) + delta(T(X0) + Z))^2]
//
// with X0 and Z independent. Everything here is exact rational arithmetic.

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "witsen/error.hpp"
#include "witsen/rational.hpp"

namespace witsen {

struct Atom {
  Int value;
  Rational prob;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite distribution over the integers with exact, strictly positive
/// probabilities summing to one. Atoms are kept in ascending value order.
class ProbMass {
 public:
  /// Merges duplicate values, drops zero-probability atoms and checks that
  /// the total is exactly one.
  explicit ProbMass(std::vector<std::pair<Int, Rational>> pairs) {
    std::map<Int, Rational> merged;
    for (auto& [value, prob] : pairs) {
      if (prob < 0) throw Error(ErrorKind::InvalidArgument, "negative probability for atom " + value.str());
      merged[value] += prob;
    }
    Rational total = 0;
    for (auto& [value, prob] : merged) {
      if (prob == 0) continue;
      total += prob;
      atoms_.push_back({value, prob});
    }
    if (atoms_.empty()) throw Error(ErrorKind::EmptySupport, "distribution has no atom with positive probability");
    if (total != 1) throw Error(ErrorKind::NotNormalized, "probabilities sum to " + to_string(total));
  }

  static ProbMass uniform(std::span<const Int> values) {
    std::set<Int> distinct(values.begin(), values.end());
    if (distinct.empty()) throw Error(ErrorKind::EmptySupport, "uniform over an empty set");
    Rational p(1, static_cast<long long>(distinct.size()));
    std::vector<std::pair<Int, Rational>> pairs;
    for (const auto& v : distinct) pairs.emplace_back(v, p);
    return ProbMass(std::move(pairs));
  }

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  std::vector<Int> support() const {
    std::vector<Int> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back(a.value);
    return out;
  }

  bool contains(const Int& v) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), v,
                               [](const Atom& a, const Int& key) { return a.value < key; });
    return it != atoms_.end() && it->value == v;
  }

  friend bool operator==(const ProbMass&, const ProbMass&) = default;

 private:
  std::vector<Atom> atoms_;
};

inline ProbMass make_prob_mass(std::vector<std::pair<Int, Rational>> pairs) { return ProbMass(std::move(pairs)); }

struct Instance {
  ProbMass x0;
  ProbMass z;
  Rational k;

  Instance(ProbMass x0_, ProbMass z_, Rational k_) : x0(std::move(x0_)), z(std::move(z_)), k(std::move(k_)) {
    if (k <= 0) throw Error(ErrorKind::InvalidArgument, "weight K must be positive, got " + to_string(k));
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// First-stage map, defined exactly on supp(X0).
struct TransportMap {
  std::map<Int, Int> entries;

  const Int& at(const Int& x) const {
    auto it = entries.find(x);
    if (it == entries.end()) throw Error(ErrorKind::DomainMismatch, "transport map undefined at " + x.str());
    return it->second;
  }

  static TransportMap identity(const ProbMass& x0) {
    TransportMap t;
    for (const auto& a : x0.atoms()) t.entries.emplace(a.value, a.value);
    return t;
  }

  friend bool operator==(const TransportMap&, const TransportMap&) = default;
};

/// Second-stage map, defined exactly on the reachable observations.
struct SecondStageMap {
  std::map<Int, Int> entries;

  const Int& at(const Int& y) const {
    auto it = entries.find(y);
    if (it == entries.end()) throw Error(ErrorKind::DomainMismatch, "second-stage map undefined at " + y.str());
    return it->second;
  }

  friend bool operator==(const SecondStageMap&, const SecondStageMap&) = default;
};

struct Strategy {
  TransportMap t;
  SecondStageMap delta;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

struct CostBreakdown {
  Rational first_stage;
  Rational second_stage_unweighted;
  Rational second_stage_weighted;  // K * second_stage_unweighted
  Rational total;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

inline void check_transport_domain(const Instance& inst, const TransportMap& t) {
  if (t.entries.size() != inst.x0.size())
    throw Error(ErrorKind::DomainMismatch, "transport map must be defined exactly on supp(X0)");
  for (const auto& a : inst.x0.atoms()) (void)t.at(a.value);
}

inline std::vector<Int> reachable_observations(const Instance& inst, const TransportMap& t) {
  check_transport_domain(inst, t);
  std::set<Int> ys;
  for (const auto& a : inst.x0.atoms()) {
    const Int& tx = t.at(a.value);
    for (const auto& b : inst.z.atoms()) ys.insert(tx + b.value);
  }
  return {ys.begin(), ys.end()};
}

namespace detail {

// Per-observation sufficient statistics: total mass, mass-weighted T value
// and mass-weighted squared T value.
struct ObservationMoments {
  Rational mass;
  Rational first;
  Rational second;
};

inline std::map<Int, ObservationMoments> observation_moments(const Instance& inst, const TransportMap& t) {
  check_transport_domain(inst, t);
  std::map<Int, ObservationMoments> out;
  for (const auto& a : inst.x0.atoms()) {
    const Int& tx = t.at(a.value);
    for (const auto& b : inst.z.atoms()) {
      Rational w = a.prob * b.prob;
      auto& m = out[tx + b.value];
      m.mass += w;
      m.first += w * tx;
      m.second += w * tx * tx;
    }
  }
  return out;
}

}  // namespace detail

/// Least-squares second stage: delta(y) is the integer nearest to
/// -E[T(X0) | Y = y], ties toward smaller magnitude.
inline SecondStageMap optimal_second_stage(const Instance& inst, const TransportMap& t) {
  SecondStageMap d;
  for (const auto& [y, m] : detail::observation_moments(inst, t)) {
    Rational target = -m.first / m.mass;
    d.entries.emplace(y, round_nearest(target));
  }
  return d;
}

inline CostBreakdown evaluate_cost(const Instance& inst, const TransportMap& t, const SecondStageMap& d) {
  check_transport_domain(inst, t);
  auto reachable = reachable_observations(inst, t);
  if (d.entries.size() != reachable.size())
    throw Error(ErrorKind::DomainMismatch, "second-stage map must be defined exactly on the reachable observations");

  CostBreakdown c;
  for (const auto& a : inst.x0.atoms()) {
    const Int& tx = t.at(a.value);
    Int move = tx - a.value;
    c.first_stage += a.prob * Rational(move * move);
    for (const auto& b : inst.z.atoms()) {
      Int residual = tx + d.at(tx + b.value);
      c.second_stage_unweighted += a.prob * b.prob * Rational(residual * residual);
    }
  }
  c.second_stage_weighted = inst.k * c.second_stage_unweighted;
  c.total = c.first_stage + c.second_stage_weighted;
  return c;
}

inline CostBreakdown evaluate_cost(const Instance& inst, const Strategy& s) { return evaluate_cost(inst, s.t, s.delta); }

/// Cost of T paired with its optimal second stage.
inline CostBreakdown evaluate_transport(const Instance& inst, const TransportMap& t) {
  return evaluate_cost(inst, t, optimal_second_stage(inst, t));
}

/// Pairs (x_i, x_j), x_i < x_j, with T(x_i) != T(x_j) whose observation sets
/// intersect.
inline std::vector<std::pair<Int, Int>> collisions(const Instance& inst, const TransportMap& t) {
  check_transport_domain(inst, t);
  std::set<Int> zdiffs;
  for (const auto& a : inst.z.atoms())
    for (const auto& b : inst.z.atoms()) zdiffs.insert(a.value - b.value);

  std::vector<std::pair<Int, Int>> out;
  const auto& atoms = inst.x0.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      Int gap = t.at(atoms[i].value) - t.at(atoms[j].value);
      if (gap != 0 && zdiffs.count(gap)) out.emplace_back(atoms[i].value, atoms[j].value);
    }
  }
  return out;
}

inline bool has_collision(const Instance& inst, const TransportMap& t) { return !collisions(inst, t).empty(); }

}  // namespace witsen

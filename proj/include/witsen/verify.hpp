#pragma once

// Property checks at desk scale, collected into a report whose every record
// carries the exact observed values it was judged on.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "witsen/approx.hpp"
#include "witsen/exact.hpp"
#include "witsen/json_io.hpp"
#include "witsen/random_instances.hpp"
#include "witsen/reduction.hpp"
#include "witsen/sidon.hpp"

namespace witsen {

struct VerifyRecord {
  std::string check;
  std::string subject;
  std::string relation;
  std::vector<std::pair<std::string, std::string>> observed;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyRecord> records;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
  }
  bool all_pass() const { return failures() == 0; }

  void append(VerifyReport other) {
    for (auto& r : other.records) records.push_back(std::move(r));
  }
};

struct VerifyLimits {
  int sidon_max_k = 8;
  int sandwich_max_n = 5;
  int reduction_max_n = 4;
  int zsupport_max_n = 6;
  int ratio_trials = 200;
  int ratio_max_n = 5;
  int ratio_max_z = 3;
  int perturbation = 3;
  std::uint64_t budget = 20'000'000;
};

// Sidon construction: size, range and order-4 property for k = 1..max_k.
inline VerifyReport verify_sidon(int max_k) {
  VerifyReport rep;
  for (int k = 1; k <= max_k; ++k) {
    SidonSet s = construct_sidon(k);
    Int k8 = 1;
    for (int i = 0; i < 8; ++i) k8 *= k;
    Int bound = 20 * k8;
    const Int& mx = s.elements.back();
    bool sidon = is_sidon(s.elements, 4);
    bool size_ok = static_cast<int>(s.elements.size()) == k;
    rep.records.push_back({"sidon.construct", "k=" + std::to_string(k), "|S| = k, max S <= 20k^8, S Sidon of order 4",
                           {{"size", std::to_string(s.elements.size())},
                            {"max", mx.str()},
                            {"bound", bound.str()},
                            {"is_sidon", sidon ? "true" : "false"}},
                           size_ok && mx <= bound && sidon && (k != 1 || mx == 1)});
  }
  return rep;
}

// kappa^2 >= gamma* >= (kappa - 2)^3 / (12 n) on every labeled graph.
inline VerifyReport verify_sandwich(int max_n) {
  VerifyReport rep;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& g : all_graphs(n)) {
      auto s = chromatic_sandwich(g);
      rep.records.push_back({"sandwich", graph_id(g), "kappa^2 >= gamma* and 12 n gamma* >= (kappa-2)^3",
                             {{"kappa", std::to_string(s.kappa)}, {"gamma_star", to_string(s.gamma_star)}},
                             s.holds()});
    }
  }
  return rep;
}

// Exact optimum of the reduction instance equals gamma*; also audits that
// the coloring's strategy has zero second-stage cost.
inline VerifyReport verify_reduction_equivalence(int max_n, std::uint64_t budget) {
  VerifyReport rep;
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& g : all_graphs(n)) {
      if (g.edges().empty()) continue;
      ReductionOutput r = graph_to_instance(g);
      ExactOptions opts;
      opts.budget = budget;
      opts.displacement_cap = reduction_displacement_cap(n);
      ExactResult e = exact_optimum(r.instance, opts);
      L2ChromaticResult l2 = l2_chromatic_bruteforce(g);
      CostBreakdown via_coloring = evaluate_cost(r.instance, coloring_to_strategy(r, l2.witness));
      bool pass = e.cost.total == l2.gamma_star && via_coloring.total == l2.gamma_star &&
                  via_coloring.second_stage_weighted == 0;
      rep.records.push_back({"reduction.equivalence", graph_id(g), "exact optimum = gamma* = cost of coloring strategy",
                             {{"exact_optimum", to_string(e.cost.total)},
                              {"gamma_star", to_string(l2.gamma_star)},
                              {"coloring_strategy_cost", to_string(via_coloring.total)},
                              {"explored", std::to_string(e.explored)}},
                             pass});
    }
  }
  return rep;
}

struct ZSupportTally {
  std::uint64_t graphs = 0, pairs = 0, membership_violations = 0, count_violations = 0;
};

// (x_i - x_j)/2 in supp(Z) iff {i, j} is an edge, and |supp Z| = 2|E| <= n^2.
inline ZSupportTally zsupport_tally(int n) {
  ZSupportTally t;
  if (n < 2) return t;
  SidonSet base = construct_sidon(n);
  Int scale = reduction_scale(n);
  Rational k = reduction_weight(n);
  for (const auto& g : all_graphs(n)) {
    if (g.edges().empty()) continue;
    ReductionOutput r = build_reduction(g, base, scale, k);
    ++t.graphs;
    std::size_t zs = r.instance.z.size();
    if (zs != 2 * g.edges().size() || zs > static_cast<std::size_t>(n * n)) ++t.count_violations;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        ++t.pairs;
        bool in_support = r.instance.z.contains((r.x_values[i - 1] - r.x_values[j - 1]) / 2);
        if (in_support != g.adjacent(i, j)) ++t.membership_violations;
      }
    }
  }
  return t;
}

inline VerifyReport verify_zsupport(int max_n) {
  VerifyReport rep;
  for (int n = 2; n <= max_n; ++n) {
    ZSupportTally t = zsupport_tally(n);
    rep.records.push_back({"reduction.zsupport", "all graphs n=" + std::to_string(n),
                           "(x_i-x_j)/2 in supp Z <=> edge; |supp Z| = 2|E| <= n^2",
                           {{"graphs", std::to_string(t.graphs)},
                            {"ordered_pairs", std::to_string(t.pairs)},
                            {"membership_violations", std::to_string(t.membership_violations)},
                            {"count_violations", std::to_string(t.count_violations)}},
                           t.membership_violations == 0 && t.count_violations == 0});
  }
  return rep;
}

// Hand-derived constants for K2 and K3: l = 4 (ceil(n^1.5) + 1), x = l * S,
// supp(Z) = edge half-differences, K = n^5 + 1.
inline VerifyReport verify_reduction_calibration() {
  struct Case {
    Graph g;
    Int scale;
    std::vector<Int> xs, zs;
    Rational k;
  };
  const std::vector<Case> cases = {
      {Graph(2, {{1, 2}}), 16, {16, 336}, {-160, 160}, 33},
      {Graph(3, {{1, 2}, {1, 3}, {2, 3}}),
       28,
       {28, 588, 143388},
       {-71680, -71400, -280, 280, 71400, 71680},
       244},
  };
  VerifyReport rep;
  for (const auto& c : cases) {
    ReductionOutput r = graph_to_instance(c.g);
    bool pass = r.scale == c.scale && r.x_values == c.xs && r.instance.z.support() == c.zs && r.instance.k == c.k;
    rep.records.push_back({"reduction.calibration", graph_id(c.g), "l, x, supp(Z), K equal hand-derived values",
                           {{"scale", r.scale.str()}, {"k", to_string(r.instance.k)},
                            {"max_x", r.x_values.back().str()}},
                           pass});
  }
  return rep;
}

inline VerifyReport verify_reduction(const VerifyLimits& limits) {
  VerifyReport rep = verify_reduction_calibration();
  rep.append(verify_reduction_equivalence(limits.reduction_max_n, limits.budget));
  rep.append(verify_zsupport(limits.zsupport_max_n));
  return rep;
}

/// Displacement bound and collision structure of T^k for every k.
inline VerifyRecord displacement_record(const Instance& inst, const std::string& id) {
  Int bound = displacement_bound(inst);
  Int worst = 0;
  std::size_t stray_collisions = 0;
  const auto ranked = rank_atoms(inst.x0);
  for (std::size_t k = 0; k <= inst.x0.size(); ++k) {
    TransportMap t = collision_free_transport(inst, k);
    for (const auto& [x, tx] : t.entries) worst = std::max(worst, Int(abs(tx - x)));
    std::set<Int> fixed;
    for (std::size_t i = 0; i < k; ++i) fixed.insert(ranked[i].value);
    for (const auto& [a, b] : collisions(inst, t))
      if (!fixed.count(a) || !fixed.count(b)) ++stray_collisions;
  }
  return {"approx.displacement", id, "max_k max_x |T^k(x)-x| <= |X||Z|^2; collisions only inside the fixed prefix",
          {{"max_displacement", worst.str()}, {"bound", bound.str()}, {"stray_collisions", std::to_string(stray_collisions)}},
          worst <= bound && stray_collisions == 0};
}

/// Phi_2 = 0 exactly when T has no collision, over the given transports.
inline VerifyRecord zero_second_stage_record(const Instance& inst, const std::vector<TransportMap>& ts,
                                             const std::string& id) {
  std::size_t mismatches = 0, zero = 0;
  for (const auto& t : ts) {
    bool z = evaluate_transport(inst, t).second_stage_unweighted == 0;
    zero += z ? 1 : 0;
    if (z == has_collision(inst, t)) ++mismatches;
  }
  return {"core.zero_second_stage", id, "Phi_2 = 0 <=> no collision",
          {{"transports", std::to_string(ts.size())}, {"zero_cost", std::to_string(zero)},
           {"mismatches", std::to_string(mismatches)}},
          mismatches == 0};
}

/// The least-squares second stage against every perturbation within
/// +-radius. The cost is a sum of independent per-observation terms, so
/// checking each entry's perturbations covers every combination; when the
/// full product is small it is enumerated as well.
inline VerifyRecord delta_optimality_record(const Instance& inst, const std::vector<TransportMap>& ts, int radius,
                                            const std::string& id) {
  std::uint64_t alternatives = 0, beaten = 0;
  for (const auto& t : ts) {
    SecondStageMap best = optimal_second_stage(inst, t);
    Rational base = evaluate_cost(inst, t, best).total;
    std::vector<Int> keys;
    for (const auto& [y, d] : best.entries) keys.push_back(y);

    auto check = [&](const SecondStageMap& alt) {
      ++alternatives;
      if (evaluate_cost(inst, t, alt).total < base) ++beaten;
    };
    for (const auto& y : keys) {
      for (int off = -radius; off <= radius; ++off) {
        if (off == 0) continue;
        SecondStageMap alt = best;
        alt.entries[y] += off;
        check(alt);
      }
    }
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < keys.size() && product <= 2401; ++i) product *= static_cast<std::uint64_t>(2 * radius + 1);
    if (product <= 2401) {
      std::vector<int> off(keys.size(), -radius);
      while (true) {
        SecondStageMap alt = best;
        for (std::size_t i = 0; i < keys.size(); ++i) alt.entries[keys[i]] += off[i];
        check(alt);
        std::size_t i = 0;
        for (; i < keys.size(); ++i) {
          if (off[i] < radius) {
            ++off[i];
            break;
          }
          off[i] = -radius;
        }
        if (i == keys.size()) break;
      }
    }
  }
  return {"core.delta_optimality", id, "no delta within +-" + std::to_string(radius) + " per entry beats the least-squares delta",
          {{"alternatives", std::to_string(alternatives)}, {"strictly_better", std::to_string(beaten)}},
          beaten == 0};
}

struct RatioCorpusEntry {
  Instance instance;
  ApproxResult approx;
  ExactResult exact;
};

/// Seeded corpus of small random instances on which the exact solver
/// completes; instances over budget are skipped and counted.
struct RatioCorpus {
  std::vector<RatioCorpusEntry> entries;
  std::uint64_t attempted = 0;
  std::uint64_t skipped = 0;
};

inline RatioCorpus build_ratio_corpus(int trials, std::uint64_t seed, const VerifyLimits& limits) {
  RatioCorpus c;
  Rng rng(seed);
  ExactOptions opts;
  opts.budget = limits.budget;
  const std::uint64_t max_attempts = 20 * static_cast<std::uint64_t>(std::max(trials, 1));
  while (static_cast<int>(c.entries.size()) < trials && c.attempted < max_attempts) {
    Instance inst = random_small_instance(rng, limits.ratio_max_n, limits.ratio_max_z);
    ++c.attempted;
    try {
      ExactResult e = exact_optimum(inst, opts);
      ApproxResult a = algorithm1(inst);
      c.entries.push_back({std::move(inst), std::move(a), std::move(e)});
    } catch (const BudgetExceeded&) {
      ++c.skipped;
    }
  }
  return c;
}

inline Int ratio_bound(const Instance& inst) {
  Int nx = static_cast<long long>(inst.x0.size());
  Int nz = static_cast<long long>(inst.z.size());
  return nx * nx * nx * nz * nz * nz * nz;
}

// X0, Z uniform on {0, 1}, T = identity: delta(1) sits on the tie between 0
// and -1 and must resolve to 0; the total is then 25 at K = 100.
inline VerifyRecord delta_tie_record() {
  Instance inst(ProbMass::uniform(std::vector<Int>{0, 1}), ProbMass::uniform(std::vector<Int>{0, 1}), 100);
  TransportMap id = TransportMap::identity(inst.x0);
  SecondStageMap d = optimal_second_stage(inst, id);
  CostBreakdown c = evaluate_cost(inst, id, d);
  ExactResult e = exact_optimum(inst);
  bool pass = d.at(0) == 0 && d.at(1) == 0 && d.at(2) == -1 && c.total == 25 && e.cost.total == Rational(1, 2) &&
              e.strategy.t.at(0) == -1 && e.strategy.t.at(1) == 1;
  return {"delta.tie_break", "X0=Z=U{0,1} K=100", "delta = (0, 0, -1), identity cost 25, optimum 1/2 at T = (-1, 1)",
          {{"delta_1", d.at(1).str()}, {"identity_cost", to_string(c.total)}, {"optimum", to_string(e.cost.total)}},
          pass};
}

inline VerifyReport verify_ratio(int trials, std::uint64_t seed, const VerifyLimits& limits) {
  VerifyReport rep;
  rep.records.push_back(delta_tie_record());
  RatioCorpus corpus = build_ratio_corpus(trials, seed, limits);
  std::optional<Rational> max_ratio;
  std::size_t index = 0;
  for (const auto& entry : corpus.entries) {
    const Instance& inst = entry.instance;
    std::string id = "seed" + std::to_string(seed) + "#" + std::to_string(index++) + " |X|=" +
                     std::to_string(inst.x0.size()) + " |Z|=" + std::to_string(inst.z.size()) + " K=" + to_string(inst.k);
    const Rational& approx = entry.approx.cost.total;
    const Rational& opt = entry.exact.cost.total;
    Int bound = ratio_bound(inst);
    std::string ratio = "NA";
    if (opt > 0) {
      Rational r = approx / opt;
      ratio = to_string(r);
      if (!max_ratio || r > *max_ratio) max_ratio = r;
    }
    rep.records.push_back({"approx.ratio", id, "approx <= |X|^3 |Z|^4 * optimum and optimum <= approx",
                           {{"approx", to_string(approx)}, {"optimum", to_string(opt)}, {"ratio", ratio},
                            {"bound", bound.str()}},
                           approx <= Rational(bound) * opt && opt <= approx});

    rep.records.push_back(displacement_record(inst, id));

    std::vector<TransportMap> transports;
    for (std::size_t k = 0; k <= inst.x0.size(); ++k) transports.push_back(collision_free_transport(inst, k));
    transports.push_back(entry.exact.strategy.t);
    rep.records.push_back(zero_second_stage_record(inst, transports, id));
    if (inst.x0.size() <= 4 && inst.z.size() <= 4)
      rep.records.push_back(delta_optimality_record(inst, transports, limits.perturbation, id));
  }
  rep.records.push_back({"approx.ratio_corpus", "seed" + std::to_string(seed),
                         "exact oracle completed on the requested number of instances",
                         {{"requested", std::to_string(trials)},
                          {"completed", std::to_string(corpus.entries.size())},
                          {"attempted", std::to_string(corpus.attempted)},
                          {"skipped_budget", std::to_string(corpus.skipped)},
                          {"max_ratio", max_ratio ? to_string(*max_ratio) : "NA"}},
                         static_cast<int>(corpus.entries.size()) == trials});
  return rep;
}

enum class VerifyScope { Sidon, Sandwich, Reduction, Ratio, All };

inline VerifyReport run_verify(VerifyScope scope, const VerifyLimits& limits, std::uint64_t seed) {
  VerifyReport rep;
  if (scope == VerifyScope::Sidon || scope == VerifyScope::All) rep.append(verify_sidon(limits.sidon_max_k));
  if (scope == VerifyScope::Sandwich || scope == VerifyScope::All) rep.append(verify_sandwich(limits.sandwich_max_n));
  if (scope == VerifyScope::Reduction || scope == VerifyScope::All) rep.append(verify_reduction(limits));
  if (scope == VerifyScope::Ratio || scope == VerifyScope::All)
    rep.append(verify_ratio(limits.ratio_trials, seed, limits));
  return rep;
}

inline Json to_json(const VerifyReport& rep) {
  Json records = Json::array();
  for (const auto& r : rep.records) {
    Json obs = Json::object();
    for (const auto& [k, v] : r.observed) obs[k] = v;
    records.push_back(Json{{"check", r.check}, {"subject", r.subject}, {"relation", r.relation},
                           {"observed", obs}, {"pass", r.pass}});
  }
  return Json{{"records", records},
              {"summary", Json{{"total", rep.records.size()},
                               {"passed", rep.records.size() - rep.failures()},
                               {"failed", rep.failures()}}}};
}

inline void write_table(std::ostream& out, const VerifyReport& rep) {
  for (const auto& r : rep.records) {
    out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << r.check << ' ' << std::setw(34) << r.subject;
    for (const auto& [k, v] : r.observed) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << rep.records.size() - rep.failures() << '/' << rep.records.size() << " checks passed\n";
}

}  // namespace witsen

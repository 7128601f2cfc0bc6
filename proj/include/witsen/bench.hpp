#pragma once

// Benchmark runner: approximation vs exact optimum over a seeded family.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>

#include "witsen/approx.hpp"
#include "witsen/exact.hpp"
#include "witsen/random_instances.hpp"

namespace witsen {

struct BenchSpec {
  int n = 3;
  int z_size = 2;
  int trials = 10;
  std::uint64_t seed = 0;
  FamilySpec family;
  // Cycles through K = 1, 10, n^5 + 1 unless a fixed weight is given.
  std::optional<Rational> fixed_k;
  std::uint64_t budget = 2'000'000;

  void validate() const {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "bench: n must be at least 1");
    if (z_size < 1) throw Error(ErrorKind::InvalidArgument, "bench: |Z| must be at least 1");
    if (trials < 0) throw Error(ErrorKind::InvalidArgument, "bench: trials must be nonnegative");
    if (2 * family.x_range + 1 < n) throw Error(ErrorKind::InvalidArgument, "bench: value range too small for n");
    if (2 * family.z_range + 1 < z_size) throw Error(ErrorKind::InvalidArgument, "bench: noise range too small for |Z|");
    if (family.max_weight < 1) throw Error(ErrorKind::InvalidArgument, "bench: max weight must be positive");
    if (fixed_k && *fixed_k <= 0) throw Error(ErrorKind::InvalidArgument, "bench: K must be positive");
  }
};

inline const char* kBenchHeader = "instance_id,n,z_size,k,approx_cost,exact_cost,ratio,wall_time_ms";

/// CSV rows, one per trial. Everything except wall_time_ms is a function of
/// the BenchSpec alone.
inline void run_bench(const BenchSpec& spec, std::ostream& out) {
  spec.validate();
  out << kBenchHeader << '\n';
  Rng rng(spec.seed);
  ExactOptions opts;
  opts.budget = spec.budget;
  for (int i = 0; i < spec.trials; ++i) {
    auto choice = static_cast<WeightChoice>(i % 3);
    Instance inst = random_instance(rng, spec.n, spec.z_size, choice, spec.family);
    if (spec.fixed_k) inst.k = *spec.fixed_k;

    auto start = std::chrono::steady_clock::now();
    ApproxResult a = algorithm1(inst);
    std::string exact = "NA", ratio = "NA";
    try {
      ExactResult e = exact_optimum(inst, opts);
      exact = to_string(e.cost.total);
      if (e.cost.total > 0) ratio = to_string(a.cost.total / e.cost.total);
    } catch (const BudgetExceeded&) {
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    out << i << ',' << spec.n << ',' << spec.z_size << ',' << to_string(inst.k) << ',' << to_string(a.cost.total)
        << ',' << exact << ',' << ratio << ',' << static_cast<std::int64_t>(ms) << '\n';
  }
}

}  // namespace witsen

#pragma once

// Seeded random instance families. Only the raw 64-bit output of
// std::mt19937_64 is used (its sequence is fixed by the standard); range
// reduction is done here so streams are identical on every platform.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "witsen/core.hpp"

namespace witsen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi] by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty random range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  // `count` distinct values from [lo, hi].
  std::vector<std::int64_t> sample_distinct(std::int64_t lo, std::int64_t hi, std::size_t count) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(hi - lo + 1));
    std::iota(pool.begin(), pool.end(), lo);
    if (count > pool.size()) throw Error(ErrorKind::InvalidArgument, "cannot draw that many distinct values");
    for (std::size_t i = 0; i < count; ++i) {
      auto j = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(pool.size()) - 1));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

struct FamilySpec {
  int x_range = 20;      // X0 support drawn from [-x_range, x_range]
  int z_range = 5;       // Z support drawn from [-z_range, z_range]
  int max_weight = 12;   // unnormalized atom weights in [1, max_weight]
};

enum class WeightChoice { One, Ten, AboveFifthPower };

inline Rational weight_value(WeightChoice c, int n) {
  switch (c) {
    case WeightChoice::One: return 1;
    case WeightChoice::Ten: return 10;
    case WeightChoice::AboveFifthPower: {
      Int nn = n;
      return Rational(nn * nn * nn * nn * nn + 1);
    }
  }
  return 1;
}

// Random rational point of the simplex: i.i.d. integer weights, normalized.
inline ProbMass random_mass(Rng& rng, const std::vector<std::int64_t>& values, int max_weight) {
  std::vector<std::int64_t> w;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    w.push_back(rng.uniform(1, max_weight));
    total += w.back();
  }
  std::vector<std::pair<Int, Rational>> pairs;
  for (std::size_t i = 0; i < values.size(); ++i) pairs.emplace_back(Int(values[i]), Rational(w[i], total));
  return ProbMass(std::move(pairs));
}

inline Instance random_instance(Rng& rng, int n, int z_size, WeightChoice k, const FamilySpec& spec = {}) {
  auto xs = rng.sample_distinct(-spec.x_range, spec.x_range, static_cast<std::size_t>(n));
  auto zs = rng.sample_distinct(-spec.z_range, spec.z_range, static_cast<std::size_t>(z_size));
  ProbMass x0 = random_mass(rng, xs, spec.max_weight);
  ProbMass z = random_mass(rng, zs, spec.max_weight);
  return Instance(std::move(x0), std::move(z), weight_value(k, n));
}

/// |X0| uniform in [1, max_n], |Z| uniform in [1, max_z], K from {1, 10, n^5+1}.
inline Instance random_small_instance(Rng& rng, int max_n, int max_z, const FamilySpec& spec = {}) {
  int n = static_cast<int>(rng.uniform(1, max_n));
  int z = static_cast<int>(rng.uniform(1, max_z));
  auto k = static_cast<WeightChoice>(rng.uniform(0, 2));
  return random_instance(rng, n, z, k, spec);
}

}  // namespace witsen

#pragma once

// Sidon sets of order p: integer sets whose p-element multiset sums are all
// distinct. construct_sidon builds the order-4 sets used by the graph
// reduction, with |S| = k and S inside {1, ..., 20 k^8}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "witsen/error.hpp"
#include "witsen/rational.hpp"

namespace witsen {

struct SidonSet {
  std::vector<Int> elements;  // ascending
  int order = 4;

  friend bool operator==(const SidonSet&, const SidonSet&) = default;
};

namespace detail {

// Calls f(sum) for every multiset of `size` elements drawn from values[from..].
template <typename T, typename F>
void for_each_multiset_sum(std::span<const T> values, int size, std::size_t from, T partial, F&& f) {
  if (size == 0) {
    f(partial);
    return;
  }
  for (std::size_t i = from; i < values.size(); ++i)
    for_each_multiset_sum<T>(values, size - 1, i, partial + values[i], f);
}

}  // namespace detail

/// Brute force over all C(|S|+p-1, p) multisets.
inline bool is_sidon(std::span<const Int> elements, int order) {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "Sidon order must be at least 1");
  std::set<Int> distinct(elements.begin(), elements.end());
  if (distinct.size() != elements.size()) throw Error(ErrorKind::InvalidArgument, "Sidon candidate has repeated elements");
  if (elements.empty()) return true;

  std::vector<Int> sorted(distinct.begin(), distinct.end());
  std::vector<Int> sums;
  detail::for_each_multiset_sum<Int>(sorted, order, 0, Int(0), [&](const Int& s) { sums.push_back(s); });
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

inline bool is_sidon(const SidonSet& s) { return is_sidon(s.elements, s.order); }

inline SidonSet scale(const SidonSet& s, const Int& factor) {
  if (factor <= 0) throw Error(ErrorKind::InvalidArgument, "Sidon scale factor must be positive");
  SidonSet out{{}, s.order};
  for (const auto& e : s.elements) out.elements.push_back(e * factor);
  return out;
}

/// Largest k accepted by construct_sidon: keeps every 4-sum below 2^63.
inline constexpr int kMaxSidonSize = 128;

/// Smallest v in [lo, hi] such that set + {v} is Sidon of order 4, given that
/// `set` already is. Only the 4-sums that involve v are new, so v is admissible
/// iff those are pairwise distinct and disjoint from the 4-sums of `set`.
inline std::optional<std::int64_t> smallest_sidon_extension(std::span<const std::int64_t> set, std::int64_t lo,
                                                            std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> partial(5);
  for (int r = 0; r <= 4; ++r)
    detail::for_each_multiset_sum<std::int64_t>(set, r, 0, 0, [&](std::int64_t s) { partial[r].push_back(s); });
  std::unordered_set<std::int64_t> four_sums(partial[4].begin(), partial[4].end());

  std::vector<std::int64_t> fresh;
  for (std::int64_t v = std::max<std::int64_t>(lo, 1); v <= hi; ++v) {
    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
    fresh.clear();
    for (int copies = 1; copies <= 4; ++copies)
      for (std::int64_t s : partial[4 - copies]) fresh.push_back(copies * v + s);
    if (std::any_of(fresh.begin(), fresh.end(), [&](std::int64_t s) { return four_sums.count(s) > 0; })) continue;
    std::sort(fresh.begin(), fresh.end());
    if (std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end()) return v;
  }
  return std::nullopt;
}

/// Greedy order-4 construction. Starts from {1}; the (j+1)-th element is the
/// smallest admissible v in (20 j^8, 20 (j+1)^8].
inline SidonSet construct_sidon(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "Sidon size must be at least 1");
  if (k > kMaxSidonSize) throw Error(ErrorKind::TooLarge, "Sidon size above " + std::to_string(kMaxSidonSize));

  auto bound = [](std::int64_t j) {
    std::int64_t p = 1;
    for (int i = 0; i < 8; ++i) p *= j;
    return 20 * p;
  };

  std::vector<std::int64_t> set{1};
  for (std::int64_t j = 1; j < k; ++j) {
    auto v = smallest_sidon_extension(set, bound(j) + 1, bound(j + 1));
    if (!v) throw Error(ErrorKind::Internal, "no admissible Sidon extension in range");
    set.push_back(*v);
  }

  SidonSet out{{}, 4};
  for (auto v : set) out.elements.emplace_back(v);
  return out;
}

}  // namespace witsen

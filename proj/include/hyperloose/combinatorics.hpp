#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "error.hpp"

namespace hyperloose {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    require(r <= std::numeric_limits<std::uint64_t>::max(), ErrorKind::budget_exceeded, "binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

// Combinatorial number system: rank of a sorted set among all sets of its
// size, independent of the ambient vertex count.
template <class T>
std::uint64_t colex_rank(std::span<const T> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(sorted[i], i + 1);
  return r;
}

// Calls f(span) for every k-subset of {0..n-1} in lexicographic order.
// Stops early when f returns false.
template <class F>
void for_each_combination(std::uint32_t n, std::uint32_t k, F&& f) {
  if (k > n) return;
  std::vector<std::uint32_t> c(k);
  for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(std::span<const std::uint32_t>(c))), bool>) {
      if (!f(std::span<const std::uint32_t>(c))) return;
    } else {
      f(std::span<const std::uint32_t>(c));
    }
    if (k == 0) return;
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Same, over the k-subsets of an arbitrary list of items (positions taken in order).
template <class T, class F>
void for_each_subset_of(std::span<const T> items, std::uint32_t k, F&& f) {
  std::vector<T> picked(k);
  for_each_combination(static_cast<std::uint32_t>(items.size()), k, [&](std::span<const std::uint32_t> c) {
    for (std::uint32_t i = 0; i < k; ++i) picked[i] = items[c[i]];
    if constexpr (std::is_same_v<decltype(f(std::span<const T>(picked))), bool>) {
      return f(std::span<const T>(picked));
    } else {
      f(std::span<const T>(picked));
      return true;
    }
  });
}

}  // namespace hyperloose

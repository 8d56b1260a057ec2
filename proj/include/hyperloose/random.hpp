#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace hyperloose {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) { return splitmix64(splitmix64(seed) ^ salt); }

// Uniform in [0,1) as a pure function of (seed, key): the same k-set sees the
// same draw for every p, which is what couples G(p1) into G(p2).
inline double coupled_uniform(std::uint64_t seed, std::uint64_t key) {
  std::uint64_t h = splitmix64(splitmix64(seed) + splitmix64(key ^ 0x5851f42d4c957f2dULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) { return Rng(mix_seed(seed, stream)); }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  std::shuffle(v.begin(), v.end(), rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace hyperloose

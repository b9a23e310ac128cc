// Shared helpers for the test suites: a deterministic RNG and brute-force
// oracles kept independent of the library implementations they check.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "kings/permutation.hpp"

namespace test_util {

struct Rng {
  std::uint64_t state = 0x5EED5EED;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
};

inline kings::Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.below(i + 1))]);
  }
  return kings::Permutation(v);
}

// Oracle containment: scan every k-subset of host positions and standardize.
inline bool naive_contains(const kings::Permutation& host, const kings::Permutation& pattern) {
  const int n = host.size();
  const int k = pattern.size();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (int i : idx) picked.push_back(host.at(i));
    if (kings::standardize(picked) == pattern) return true;
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
    if (t < 0) return false;
    ++idx[static_cast<std::size_t>(t)];
    for (int j = t + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

} // namespace test_util

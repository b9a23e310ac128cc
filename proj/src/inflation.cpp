#include "kings/inflation.hpp"

#include <algorithm>
#include <stdexcept>

#include "kings/patterns.hpp"

namespace kings {

Permutation inflate(const Permutation& skeleton, std::span<const Permutation> components) {
  const int k = skeleton.size();
  if (static_cast<int>(components.size()) != k) {
    throw std::invalid_argument("need exactly one component per skeleton entry");
  }
  std::vector<int> out;
  for (int i = 1; i <= k; ++i) {
    // Values of block i sit above all blocks whose skeleton entry is smaller.
    int offset = 0;
    for (int j = 1; j <= k; ++j) {
      if (skeleton.at(j) < skeleton.at(i)) offset += components[static_cast<std::size_t>(j - 1)].size();
    }
    for (int v : components[static_cast<std::size_t>(i - 1)].values()) out.push_back(offset + v);
  }
  return Permutation(std::move(out));
}

std::optional<InflationDecomposition> quadblock_decompose(const Permutation& p) {
  static const Permutation pat2413({2, 4, 1, 3});
  static const Permutation pat3142({3, 1, 4, 2});
  const int n = p.size();
  if (n % 4 != 0) return std::nullopt;
  const int k = n / 4;
  std::vector<Permutation> components;
  std::vector<int> representatives;
  std::vector<int> offsets;
  for (int b = 0; b < k; ++b) {
    std::vector<int> window;
    for (int pos = 4 * b + 1; pos <= 4 * b + 4; ++pos) window.push_back(p.at(pos));
    const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
    if (*hi - *lo != 3) return std::nullopt; // not a block
    Permutation pattern = standardize(window);
    if (pattern != pat2413 && pattern != pat3142) return std::nullopt;
    components.push_back(std::move(pattern));
    representatives.push_back(*lo);
    offsets.push_back(4 * b);
  }
  return InflationDecomposition{standardize(representatives), std::move(components),
                                std::move(offsets)};
}

bool is_separable(const Permutation& p) {
  static const Permutation pat2413({2, 4, 1, 3});
  static const Permutation pat3142({3, 1, 4, 2});
  return avoids(p, pat2413) && avoids(p, pat3142);
}

} // namespace kings

// Inflation of a skeleton by components, the quad-block structure of kings
// without princes, and separability.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kings/permutation.hpp"

namespace kings {

struct InflationDecomposition {
  Permutation skeleton;
  std::vector<Permutation> components; // one per skeleton entry, left to right
  std::vector<int> offsets;            // cumulative component sizes: 0, n1, n1+n2, ...
};

// Replaces the i-th skeleton entry by a block order-isomorphic to
// components[i]; block value ranges follow the skeleton's relative order.
// Requires one component per skeleton entry.
Permutation inflate(const Permutation& skeleton, std::span<const Permutation> components);

// If n = 4k and positions split into k consecutive 4-blocks, each patterned
// [2413] or [3142], returns that (unique) decomposition.
std::optional<InflationDecomposition> quadblock_decompose(const Permutation& p);

// Avoids both [2413] and [3142].
bool is_separable(const Permutation& p);

} // namespace kings

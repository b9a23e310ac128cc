// The containment poset restricted to kings: downsets with cover relations,
// intervals, maximal sub-kings, deletion pairs, and {1,3}-gap chains.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kings/permutation.hpp"

namespace kings {

// Subsequence enumeration is 2^n; larger roots need an explicit override.
inline constexpr int kDefaultDownsetCap = 12;

// All kings contained in `root`, including [1] and root itself, with the
// cover (Hasse) edges of containment restricted to those nodes.
struct KingDownset {
  Permutation root;
  std::vector<Permutation> nodes;                               // sorted by size, then lex
  std::vector<std::pair<Permutation, Permutation>> cover_edges; // (lower, upper), sorted
};

KingDownset downset(const Permutation& root, int size_cap = kDefaultDownsetCap);

// Just the node set of downset(root); cheaper when edges are not needed.
std::set<Permutation> king_subpatterns(const Permutation& root, int size_cap = kDefaultDownsetCap);

// Kings pi with tau contained in pi contained in sigma; the top is excluded
// when half_open. Empty when tau is not below sigma. Requires both kings.
std::set<Permutation> interval(const Permutation& tau, const Permutation& sigma, bool half_open);

// Maximal proper king sub-patterns of p. Requires is_king(p).
std::set<Permutation> covers_below(const Permutation& p);

// All (i, j) with i > j whose two position deletions take sigma to pi.
// Requires |sigma| = |pi| + 2.
std::set<std::pair<int, int>> deletion_pairs(const Permutation& sigma, const Permutation& pi);

// A king strictly between pi and sigma, one size below sigma; scans single
// value deletions in value order. Requires kings, |sigma| = |pi| + 2,
// pi strictly below sigma, and |sigma| > 4; existence is then guaranteed.
std::optional<Permutation> intermediate_king(const Permutation& sigma, const Permutation& pi);

// A chain of kings from pi up to sigma whose consecutive size gaps are all
// 1 or 3.
struct Chain {
  std::vector<Permutation> elements; // strictly increasing in containment
};

Chain find_chain(const Permutation& pi, const Permutation& sigma);

// Deterministic DOT rendering; node labels carry the Möbius value from the
// poset bottom when requested.
std::string hasse_dot(const KingDownset& d, bool with_mobius);

} // namespace kings

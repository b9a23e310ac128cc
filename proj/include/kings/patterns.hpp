// Pattern containment, occurrence enumeration, avoidance, and the set of
// distinct sub-patterns of a given size.
#pragma once

#include <set>
#include <vector>

#include "kings/permutation.hpp"

namespace kings {

// A witness of containment: host entries at `positions` standardize to `pattern`.
struct PatternOccurrence {
  std::vector<int> positions; // strictly increasing, 1-based
  Permutation pattern;
};

// Some subsequence of host standardizes to pattern. Reflexive.
bool contains(const Permutation& host, const Permutation& pattern);

// !contains; in particular avoids(p, p) is false.
bool avoids(const Permutation& host, const Permutation& pattern);

// Every occurrence, ordered lexicographically by position sequence.
std::vector<PatternOccurrence> occurrences(const Permutation& host, const Permutation& pattern);

// Standardizations of all k-subsequences of host; requires 1 <= k <= n.
std::set<Permutation> distinct_subpatterns(const Permutation& host, int k);

} // namespace kings

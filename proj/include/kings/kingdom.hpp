// Enumeration and counting of king permutations, prince detection, and the
// kings without princes.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "kings/permutation.hpp"

namespace kings {

struct KingCensus {
  int n = 0;
  std::uint64_t count = 0;
  std::optional<std::vector<Permutation>> kings; // lexicographic when materialized
};

// Streams the kings of S_n in lexicographic order; the visitor returns false
// to stop early. Backtracking prunes any prefix ending in adjacent values.
void generate_kings(int n, const std::function<bool(const Permutation&)>& visit);

// All kings of S_n, lexicographic.
std::vector<Permutation> list_kings(int n);

// |K_n| by counting backtracking leaves; jobs > 1 partitions the search by
// first value and sums the branch counts.
std::uint64_t count_kings(int n, int jobs = 1);

KingCensus census(int n, bool materialize, int jobs = 1);

// Kings obtained from p by deleting a single value. Requires is_king(p), n >= 2.
std::set<Permutation> princes(const Permutation& p);

bool has_prince(const Permutation& p);

// For n = 4k: every inflation of a skeleton in S_k by components drawn from
// {[2413],[3142]}; empty otherwise. Requires n >= 4.
std::set<Permutation> kings_without_princes(int n);

// Same set by exhaustively filtering the kings of S_n; feasible for small n
// and used as the oracle against the construction.
std::set<Permutation> kings_without_princes_filtered(int n);

} // namespace kings

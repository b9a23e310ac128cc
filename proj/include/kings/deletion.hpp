// Entry deletion by position and by value, sequences of deletions with the
// original-value bookkeeping, and vertical/horizontal separator detection.
#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kings/permutation.hpp"

namespace kings {

// One separator value together with the kinds it realizes and their witnesses.
// A value can be a separator of both kinds at once; it then gets one report.
struct SeparatorReport {
  int value = 0;
  bool vertical = false;
  bool horizontal = false;
  // Positions (i-1, i, i+1) around the separator; outer values differ by 1.
  std::optional<std::array<int, 3>> vertical_witness;
  // The two adjacent positions carrying value-1 and value+1, ascending.
  std::optional<std::array<int, 2>> horizontal_witness;
};

// Removes the entry at position i and standardizes. Requires n >= 2.
Permutation delete_position(const Permutation& p, int i);

// Removes the entry holding value v and standardizes. Requires n >= 2.
Permutation delete_value(const Permutation& p, int v);

// Removes the entries holding the listed values of p, in order, re-addressing
// each requested value by its current name after the earlier deletions.
// Values must be distinct and fewer than n.
Permutation delete_values(const Permutation& p, std::span<const int> original_values);

// Same, returning every intermediate permutation (the last one is the result).
std::vector<Permutation> delete_values_trace(const Permutation& p,
                                             std::span<const int> original_values);

// All separator values of p with kinds and witnesses, ascending by value.
// Requires n >= 3; the result may be empty.
std::vector<SeparatorReport> separators(const Permutation& p);

std::set<int> sep_v(const Permutation& p); // vertical separator values
std::set<int> sep_h(const Permutation& p); // horizontal separator values

} // namespace kings

// Permutations in one-line notation and the elementary predicates on them:
// standardization, inverse/reverse, Manhattan distance, breadth, blocks,
// simplicity, and the king / k-prolific tests.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kings {

// A bijection on {1..n}, stored in one-line notation. Positions and values
// are 1-based throughout the public API. Immutable after construction.
class Permutation {
 public:
  // Validates that `one_line` is a permutation of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  // Accepts a compact digit string ("3142", n <= 9), a comma- or
  // space-separated list ("3,1,4,2" / "3 1 4 2"), optionally bracketed.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int pos) const;            // value at 1-based position
  int position_of(int value) const; // 1-based position of a value
  const std::vector<int>& values() const { return values_; }

  std::string bracket_string() const; // "[3,1,4,2]"
  std::string compact_string() const; // "3142"; only defined for n <= 9
  std::string display_string() const; // bracket form, plus compact when n <= 9

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Orders by size first, then lexicographically by values.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// A contiguous run of positions whose values are also contiguous.
struct BlockSpan {
  int start;  // 1-based first position
  int length; // number of positions, >= 1
  friend auto operator<=>(const BlockSpan&, const BlockSpan&) = default;
};

// The unique permutation order-isomorphic to `seq` (entries replaced by rank).
// Entries must be distinct and the sequence nonempty.
Permutation standardize(std::span<const int> seq);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);

// |i-j| + |p(i)-p(j)| between two plotted entries.
int manhattan_distance(const Permutation& p, int i, int j);

// Minimum Manhattan distance over distinct entry pairs; requires n >= 2.
int breadth(const Permutation& p);

// No two adjacent positions carry adjacent values. Size 1 counts as a king.
bool is_king(const Permutation& p);

// Every block of p, trivial blocks included.
std::set<BlockSpan> blocks(const Permutation& p);

// k-blocks not contained in any (k+1)-block; requires 1 <= k <= n.
std::set<BlockSpan> strict_k_blocks(const Permutation& p, int k);

// Only trivial blocks (singletons and the whole permutation).
bool is_simple(const Permutation& p);

// breadth(p) >= k+2; requires n >= 2 and k >= 1.
bool is_k_prolific(const Permutation& p, int k);

// n x n character grid, rows printed from value n down to 1, '*' marking
// (column i, row p(i)). Requires n <= 40.
std::string ascii_plot(const Permutation& p);

} // namespace kings

template <>
struct std::hash<kings::Permutation> {
  std::size_t operator()(const kings::Permutation& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.size());
    for (int v : p.values()) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

// The Möbius function of the king poset, evaluated by the defining recursion
// with memoization, and the four-element class H inside K_5.
#pragma once

#include <map>
#include <utility>

#include "kings/permutation.hpp"
#include "kings/poset.hpp"

namespace kings {

// Memoized evaluator. mu(tau, tau) = 1; mu(tau, sigma) = 0 when tau is not
// below sigma; otherwise the negated sum over the half-open interval.
// Entries accumulate across calls, so one table can serve a whole downset.
class MobiusTable {
 public:
  explicit MobiusTable(int size_cap = kDefaultDownsetCap, bool vanishing_shortcut = false);

  long long mobius(const Permutation& tau, const Permutation& sigma);

 private:
  long long eval(const Permutation& tau, const Permutation& sigma);

  std::map<std::pair<Permutation, Permutation>, long long> entries_;
  int size_cap_;
  bool vanishing_shortcut_;
};

// One-shot evaluations with a private table.
long long mobius(const Permutation& tau, const Permutation& sigma,
                 int size_cap = kDefaultDownsetCap);
long long mobius_bottom(const Permutation& sigma, int size_cap = kDefaultDownsetCap);

// Membership in {[24153],[35142],[42513],[31524]}: the K_5 kings containing
// both [2413] and [3142].
bool is_in_H(const Permutation& p);

// mu from the bottom for every node of a downset, sharing one memo table.
std::map<Permutation, long long> mobius_downset_labels(const KingDownset& d);

} // namespace kings

#include <doctest.h>

#include <stdexcept>

#include "kings/kingdom.hpp"
#include "kings/mobius.hpp"
#include "kings/patterns.hpp"
#include "kings/poset.hpp"

using namespace kings;

namespace {

const Permutation k1({1});
const Permutation k2413({2, 4, 1, 3});
const Permutation k3142({3, 1, 4, 2});

// Reference evaluation straight from the definition, no memo table.
long long mobius_reference(const Permutation& tau, const Permutation& sigma) {
  if (tau == sigma) return 1;
  if (tau.size() >= sigma.size() || !contains(sigma, tau)) return 0;
  long long total = 0;
  for (const Permutation& pi : interval(tau, sigma, true)) total += mobius_reference(tau, pi);
  return -total;
}

} // namespace

TEST_SUITE("mobius") {

TEST_CASE("definition cases") {
  CHECK(mobius(k1, k2413) == -1);
  CHECK(mobius(k2413, k2413) == 1);
  CHECK(mobius(k1, k1) == 1);
  CHECK(mobius(k2413, k3142) == 0); // incomparable
  CHECK(mobius(k3142, k2413) == 0);
  CHECK(mobius(k1, Permutation({5, 2, 4, 6, 1, 7, 3})) == 0);
}

TEST_CASE("bottom evaluations from the diagrams") {
  CHECK(mobius_bottom(Permutation({2, 4, 1, 5, 3})) == 1);
  CHECK(mobius_bottom(Permutation({4, 1, 3, 5, 2})) == 0);
  CHECK(mobius_bottom(Permutation({4, 2, 5, 1, 6, 3})) == -1);
  CHECK(mobius_bottom(Permutation({5, 2, 4, 1, 3})) == 0);
}

TEST_CASE("H membership") {
  CHECK(is_in_H(Permutation({2, 4, 1, 5, 3})));
  CHECK(is_in_H(Permutation({3, 5, 1, 4, 2})));
  CHECK(is_in_H(Permutation({4, 2, 5, 1, 3})));
  CHECK(is_in_H(Permutation({3, 1, 5, 2, 4})));
  CHECK_FALSE(is_in_H(Permutation({4, 1, 3, 5, 2})));
  CHECK_FALSE(is_in_H(k2413));
}

TEST_CASE("H is exactly the K_5 slice containing both basis patterns") {
  int members = 0;
  for (const Permutation& p : list_kings(5)) {
    const bool both = contains(p, k2413) && contains(p, k3142);
    CHECK(is_in_H(p) == both);
    if (both) ++members;
    CHECK(mobius_bottom(p) == (both ? 1 : 0));
  }
  CHECK(members == 4);
}

TEST_CASE("downset labels reproduce the [5246173] diagram") {
  const KingDownset d = downset(Permutation({5, 2, 4, 6, 1, 7, 3}));
  const auto labels = mobius_downset_labels(d);
  REQUIRE(labels.size() == 11);
  CHECK(labels.at(k1) == 1);
  CHECK(labels.at(k2413) == -1);
  CHECK(labels.at(k3142) == -1);
  CHECK(labels.at(Permutation({2, 4, 1, 5, 3})) == 1);
  CHECK(labels.at(Permutation({4, 2, 5, 1, 3})) == 1);
  CHECK(labels.at(Permutation({4, 1, 3, 5, 2})) == 0);
  CHECK(labels.at(Permutation({5, 2, 4, 1, 3})) == 0);
  CHECK(labels.at(Permutation({4, 2, 5, 1, 6, 3})) == -1);
  CHECK(labels.at(Permutation({5, 2, 4, 1, 6, 3})) == 0);
  CHECK(labels.at(Permutation({5, 2, 4, 6, 1, 3})) == 0);
  CHECK(labels.at(Permutation({5, 2, 4, 6, 1, 7, 3})) == 0);
}

TEST_CASE("labels of the two-element downset") {
  const auto labels = mobius_downset_labels(downset(k2413));
  REQUIRE(labels.size() == 2);
  CHECK(labels.at(k1) == 1);
  CHECK(labels.at(k2413) == -1);
}

TEST_CASE("downset labels reproduce the [524163] diagram") {
  const KingDownset d = downset(Permutation({5, 2, 4, 1, 6, 3}));
  const auto labels = mobius_downset_labels(d);
  REQUIRE(labels.size() == 7);
  CHECK(labels.at(k1) == 1);
  CHECK(labels.at(k2413) == -1);
  CHECK(labels.at(k3142) == -1);
  CHECK(labels.at(Permutation({2, 4, 1, 5, 3})) == 1);
  CHECK(labels.at(Permutation({4, 1, 3, 5, 2})) == 0);
  CHECK(labels.at(Permutation({5, 2, 4, 1, 3})) == 0);
  CHECK(labels.at(Permutation({5, 2, 4, 1, 6, 3})) == 0);
  CHECK(labels.at(d.root) == 0);
}

TEST_CASE("closed interval sums vanish above the bottom") {
  MobiusTable table;
  for (int n = 4; n <= 7; ++n) {
    for (const Permutation& sigma : list_kings(n)) {
      long long total = 0;
      for (const Permutation& q : king_subpatterns(sigma)) total += table.mobius(k1, q);
      CHECK(total == 0);
    }
  }
}

TEST_CASE("memoized evaluation matches the plain recursion") {
  MobiusTable table;
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& sigma : list_kings(n)) {
      CHECK(table.mobius(k1, sigma) == mobius_reference(k1, sigma));
    }
  }
  // and from a higher base point
  for (const Permutation& sigma : list_kings(6)) {
    CHECK(table.mobius(k2413, sigma) == mobius_reference(k2413, sigma));
  }
}

TEST_CASE("the vanishing shortcut is an observable no-op") {
  MobiusTable plain;
  MobiusTable shortcut(kDefaultDownsetCap, true);
  for (int n = 5; n <= 6; ++n) {
    for (const Permutation& sigma : list_kings(n)) {
      CHECK(plain.mobius(k1, sigma) == shortcut.mobius(k1, sigma));
    }
  }
}

TEST_CASE("a pattern avoider has vanishing mu") {
  CHECK(avoids(Permutation({5, 2, 4, 1, 3}), k3142));
  CHECK(mobius_bottom(Permutation({5, 2, 4, 1, 3})) == 0);
}

TEST_CASE("the example with a unique H element below") {
  const Permutation sigma({6, 2, 4, 1, 5, 3, 7});
  CHECK(mobius_bottom(sigma) == 0);
  int h_below = 0;
  for (const Permutation& q : king_subpatterns(sigma)) {
    if (is_in_H(q)) ++h_below;
  }
  CHECK(h_below == 1);
}

TEST_CASE("size cap is enforced and overridable") {
  const Permutation big = *kings_without_princes(12).begin();
  CHECK_THROWS_AS(mobius(k1, big, 8), std::invalid_argument);
  CHECK_THROWS_AS(mobius(Permutation({1, 2}), k2413), std::invalid_argument); // non-king tau
}

} // TEST_SUITE

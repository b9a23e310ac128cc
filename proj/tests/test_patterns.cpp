#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "kings/kingdom.hpp"
#include "kings/patterns.hpp"
#include "test_util.hpp"

using namespace kings;
using test_util::Rng;
using test_util::naive_contains;
using test_util::random_permutation;

TEST_SUITE("patterns") {

TEST_CASE("containment examples") {
  CHECK(contains(Permutation({3, 6, 2, 4, 7, 1, 5}), Permutation({3, 1, 4, 2})));
  CHECK(contains(Permutation({2, 1}), Permutation({1})));
  CHECK_FALSE(contains(Permutation({4, 1, 3, 5, 2}), Permutation({2, 4, 1, 3})));
  const Permutation p({5, 2, 4, 1, 3});
  CHECK(contains(p, p));
}

TEST_CASE("avoidance examples") {
  CHECK(avoids(Permutation({4, 1, 3, 5, 2}), Permutation({2, 4, 1, 3})));
  CHECK_FALSE(avoids(Permutation({2, 4, 1, 5, 3}), Permutation({2, 4, 1, 3})));
  CHECK_FALSE(avoids(Permutation({2, 1}), Permutation({1})));
  const Permutation p({3, 1, 4, 2});
  CHECK_FALSE(avoids(p, p));
}

TEST_CASE("occurrences are exactly the witnessing subsequences") {
  const Permutation host({3, 6, 2, 4, 7, 1, 5});
  const auto occ = occurrences(host, Permutation({3, 1, 4, 2}));
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].positions == std::vector<int>{2, 3, 5, 7}); // values 6275
  CHECK(occ[1].positions == std::vector<int>{2, 4, 5, 7}); // values 6475
  const auto self = occurrences(host, host);
  REQUIRE(self.size() == 1);
  CHECK(self[0].positions == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(!occurrences(Permutation({3, 6, 1, 4, 2, 5}), Permutation({2, 4, 1, 3})).empty());
}

TEST_CASE("occurrences come out in lexicographic position order") {
  Rng rng;
  for (int s = 0; s < 300; ++s) {
    const Permutation host = random_permutation(rng, 5 + rng.below(5));
    const Permutation pat = random_permutation(rng, 2 + rng.below(3));
    const auto occ = occurrences(host, pat);
    for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
      CHECK(occ[i].positions < occ[i + 1].positions);
    }
    for (const PatternOccurrence& o : occ) {
      std::vector<int> picked;
      for (int pos : o.positions) picked.push_back(host.at(pos));
      CHECK(standardize(picked) == pat);
    }
  }
}

TEST_CASE("backtracking containment agrees with the exhaustive scan") {
  Rng rng;
  for (int s = 0; s < 10000; ++s) {
    const int hn = 1 + rng.below(9);
    const Permutation host = random_permutation(rng, hn);
    const Permutation pat = random_permutation(rng, 1 + rng.below(hn));
    CHECK(contains(host, pat) == naive_contains(host, pat));
  }
}

TEST_CASE("containment is a partial order") {
  Rng rng;
  for (int s = 0; s < 600; ++s) {
    const Permutation a = random_permutation(rng, 3 + rng.below(3));
    const Permutation b = random_permutation(rng, 4 + rng.below(3));
    const Permutation c = random_permutation(rng, 6 + rng.below(3));
    if (contains(b, a) && contains(c, b)) CHECK(contains(c, a));
    // distinct same-size permutations never contain one another
    const Permutation d = random_permutation(rng, a.size());
    if (a != d) CHECK_FALSE((contains(a, d) && contains(d, a)));
  }
}

TEST_CASE("containment transports through inverse and reverse") {
  Rng rng;
  for (int s = 0; s < 800; ++s) {
    const Permutation host = random_permutation(rng, 4 + rng.below(5));
    const Permutation pat = random_permutation(rng, 2 + rng.below(3));
    const bool c = contains(host, pat);
    CHECK(c == contains(inverse(host), inverse(pat)));
    CHECK(c == contains(reverse(host), reverse(pat)));
  }
}

TEST_CASE("distinct subpatterns") {
  const Permutation p({3, 1, 4, 2});
  CHECK(distinct_subpatterns(p, 4) == std::set<Permutation>{p});
  CHECK(distinct_subpatterns(p, 1) == std::set<Permutation>{Permutation({1})});
  CHECK_THROWS_AS(distinct_subpatterns(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(distinct_subpatterns(p, 5), std::invalid_argument);
}

TEST_CASE("all n-1 subpatterns are distinct exactly for kings") {
  for (int n = 2; n <= 7; ++n) {
    for (const Permutation& p : list_kings(n)) {
      CHECK(static_cast<int>(distinct_subpatterns(p, n - 1).size()) == n);
    }
  }
  // and a couple of non-kings collapse
  CHECK(static_cast<int>(distinct_subpatterns(Permutation({1, 2, 3}), 2).size()) < 3);
  CHECK(static_cast<int>(distinct_subpatterns(Permutation({2, 1, 4, 3}), 3).size()) < 4);
}

} // TEST_SUITE

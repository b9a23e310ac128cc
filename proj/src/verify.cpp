#include "kings/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kings/deletion.hpp"
#include "kings/inflation.hpp"
#include "kings/kingdom.hpp"
#include "kings/mobius.hpp"
#include "kings/patterns.hpp"
#include "kings/poset.hpp"

namespace kings {

namespace {

using Clock = std::chrono::steady_clock;

const Permutation& pat2413() {
  static const Permutation p({2, 4, 1, 3});
  return p;
}
const Permutation& pat3142() {
  static const Permutation p({3, 1, 4, 2});
  return p;
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
};

Permutation random_permutation(SplitMix64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.below(i + 1))]);
  }
  return Permutation(std::move(v));
}

// Runs fn over [0, count) split into contiguous chunks, one per worker, and
// concatenates the failure lists in chunk order so the output is identical
// for any job count.
std::vector<std::string> parallel_collect(
    std::size_t count, int jobs,
    const std::function<std::vector<std::string>(std::size_t, std::size_t)>& fn) {
  if (jobs <= 1 || count < 2) return fn(0, count);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::vector<std::string>> buckets(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t t = 0; t < workers; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    threads.emplace_back([&, t, begin, end] { buckets[t] = fn(begin, end); });
  }
  for (auto& th : threads) th.join();
  std::vector<std::string> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool contains_3block(const Permutation& p) {
  for (const BlockSpan& b : blocks(p)) {
    if (b.length == 3) return true;
  }
  return false;
}

// Whether p splits into at most kmax consecutive blocks, each a singleton or
// a 4-block patterned [2413]/[3142], with the block skeleton contained in
// skeleton_host.
bool quad_or_single_decomposes(const Permutation& p, int kmax, const Permutation& skeleton_host) {
  const int n = p.size();
  std::vector<int> reps;
  std::function<bool(int)> from = [&](int pos) -> bool {
    if (static_cast<int>(reps.size()) > kmax) return false;
    if (pos > n) return contains(skeleton_host, standardize(reps));
    if (pos + 3 <= n) {
      std::vector<int> window;
      for (int q = pos; q < pos + 4; ++q) window.push_back(p.at(q));
      const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
      if (*hi - *lo == 3) {
        const Permutation pat = standardize(window);
        if (pat == pat2413() || pat == pat3142()) {
          reps.push_back(*lo);
          if (from(pos + 4)) return true;
          reps.pop_back();
        }
      }
    }
    reps.push_back(p.at(pos));
    const bool ok = from(pos + 1);
    reps.pop_back();
    return ok;
  };
  return from(1);
}

std::string range_string(int lo, int hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

int effective_max(const VerifyOptions& opts, int fallback) {
  return opts.max_n > 0 ? opts.max_n : fallback;
}

// ---- individual checks ------------------------------------------------

VerificationReport verify_counts(const VerifyOptions& opts) {
  static const std::uint64_t table[] = {1, 0, 0, 2, 14, 90, 646, 5242, 47622};
  VerificationReport rep;
  const int hi = std::min(effective_max(opts, 9), 9); // reference values stop at n = 9
  rep.range = range_string(1, hi);
  for (int n = 1; n <= hi; ++n) {
    const std::uint64_t got = count_kings(n, opts.jobs);
    ++rep.checked;
    if (got != table[n - 1]) {
      rep.failures.push_back("|K_" + std::to_string(n) + "| = " + std::to_string(got) +
                             ", expected " + std::to_string(table[n - 1]));
    }
  }
  return rep;
}

VerificationReport verify_basis_containment(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = range_string(4, hi);
  for (int n = 4; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    rep.checked += ks.size();
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        if (!contains(ks[i], pat2413()) && !contains(ks[i], pat3142())) {
          out.push_back(ks[i].bracket_string() + " contains neither [2413] nor [3142]");
        }
      }
      return out;
    });
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_grandson_son(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = range_string(5, hi);
  for (int n = 5; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    std::uint64_t checked = 0;
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        const Permutation& sigma = ks[i];
        for (const Permutation& pi : distinct_subpatterns(sigma, n - 2)) {
          if (!is_king(pi)) continue;
          const auto tau = intermediate_king(sigma, pi);
          if (!tau || !is_king(*tau) || !contains(*tau, pi) || !contains(sigma, *tau)) {
            out.push_back("no king between " + pi.bracket_string() + " and " +
                          sigma.bracket_string());
          }
        }
      }
      return out;
    });
    for (const Permutation& sigma : ks) {
      for (const Permutation& pi : distinct_subpatterns(sigma, n - 2)) {
        if (is_king(pi)) ++checked;
      }
    }
    rep.checked += checked;
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_chain_13(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = range_string(4, hi);
  std::uint64_t checked = 0;
  for (int n = 4; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        const Permutation& sigma = ks[i];
        for (const Permutation& pi : king_subpatterns(sigma)) {
          if (pi == sigma) continue;
          const Chain chain = find_chain(pi, sigma);
          bool good = chain.elements.size() >= 2 && chain.elements.front() == pi &&
                      chain.elements.back() == sigma;
          for (std::size_t s = 0; good && s + 1 < chain.elements.size(); ++s) {
            const int gap = chain.elements[s + 1].size() - chain.elements[s].size();
            good = (gap == 1 || gap == 3) &&
                   contains(chain.elements[s + 1], chain.elements[s]);
          }
          if (!good) {
            out.push_back("bad chain from " + pi.bracket_string() + " to " +
                          sigma.bracket_string());
          }
        }
      }
      return out;
    });
    for (const Permutation& sigma : ks) checked += king_subpatterns(sigma).size() - 1;
    rep.checked += checked;
    checked = 0;
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_strict_2block_prince(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 7);
  rep.range = range_string(4, hi);
  for (int n = 4; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    rep.checked += ks.size() * static_cast<std::uint64_t>(n);
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        const Permutation& sigma = ks[i];
        for (int v = 1; v <= n; ++v) {
          const Permutation q = delete_value(sigma, v);
          if (strict_k_blocks(q, 2).size() == 1 && !has_prince(sigma)) {
            out.push_back(sigma.bracket_string() + " minus " + std::to_string(v) +
                          " has one strict 2-block yet sigma has no prince");
          }
        }
      }
      return out;
    });
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_no_prince_equiv(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = range_string(4, hi);
  for (int n = 4; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    rep.checked += ks.size();
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        const Permutation& p = ks[i];
        const bool quad = quadblock_decompose(p).has_value();
        bool all_deletions_3block = true;
        for (int v = 1; v <= n && all_deletions_3block; ++v) {
          all_deletions_3block = contains_3block(delete_value(p, v));
        }
        const bool princeless = !has_prince(p);
        if (quad != all_deletions_3block || quad != princeless) {
          out.push_back(p.bracket_string() + ": quad=" + std::to_string(quad) +
                        " 3block=" + std::to_string(all_deletions_3block) +
                        " princeless=" + std::to_string(princeless));
        }
      }
      return out;
    });
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_no_prince_count(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = range_string(4, hi) + " plus n=12 construction";
  const int filter_limit = opts.full_filter ? hi : std::min(hi, 8);
  for (int n = 4; n <= filter_limit; ++n) {
    std::uint64_t formula = 0;
    if (n % 4 == 0) {
      formula = std::uint64_t{1} << (n / 4); // 2^k
      for (int i = 2; i <= n / 4; ++i) formula *= static_cast<std::uint64_t>(i);
    }
    const std::set<Permutation> filtered = kings_without_princes_filtered(n);
    const std::set<Permutation> constructed =
        (n % 4 == 0) ? kings_without_princes(n) : std::set<Permutation>{};
    ++rep.checked;
    if (filtered.size() != formula) {
      rep.failures.push_back("n=" + std::to_string(n) + ": filter found " +
                             std::to_string(filtered.size()) + ", formula says " +
                             std::to_string(formula));
    }
    if (filtered != constructed) {
      rep.failures.push_back("n=" + std::to_string(n) +
                             ": filtered and constructed prince-less sets differ");
    }
  }
  // Construction-side check at n = 12: 2^3 * 3! inflations, none with a prince.
  const std::set<Permutation> twelve = kings_without_princes(12);
  ++rep.checked;
  if (twelve.size() != 48) {
    rep.failures.push_back("n=12 construction produced " + std::to_string(twelve.size()) +
                           " permutations, expected 48");
  }
  for (const Permutation& p : twelve) {
    ++rep.checked;
    if (!is_king(p) || has_prince(p)) {
      rep.failures.push_back("constructed n=12 element " + p.bracket_string() +
                             " is not a prince-less king");
    }
  }
  return rep;
}

VerificationReport verify_downset_structure(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = "n in {4,8} up to " + std::to_string(hi);
  for (int n = 4; n <= hi; n += 4) {
    const int k = n / 4;
    for (const Permutation& sigma : kings_without_princes(n)) {
      const Permutation skeleton = quadblock_decompose(sigma)->skeleton;
      for (const Permutation& q : king_subpatterns(sigma)) {
        if (q == sigma) continue;
        ++rep.checked;
        if (!quad_or_single_decomposes(q, k, skeleton)) {
          rep.failures.push_back(q.bracket_string() + " below " + sigma.bracket_string() +
                                 " has no {[2413],[3142],[1]} decomposition");
        }
      }
    }
  }
  return rep;
}

VerificationReport verify_k5_cover(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 8);
  rep.range = range_string(6, hi);
  const std::vector<Permutation> k5 = list_kings(5);
  for (int n = 6; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    rep.checked += ks.size();
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        bool covered = false;
        for (const Permutation& q : k5) {
          if (contains(ks[i], q)) {
            covered = true;
            break;
          }
        }
        if (!covered) out.push_back(ks[i].bracket_string() + " contains no element of K_5");
      }
      return out;
    });
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_mobius_vanish(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 7);
  rep.range = range_string(5, hi);
  for (int n = 5; n <= hi; ++n) {
    std::vector<Permutation> avoiders;
    for (const Permutation& p : list_kings(n)) {
      if (avoids(p, pat2413()) || avoids(p, pat3142())) avoiders.push_back(p);
    }
    rep.checked += avoiders.size();
    auto failures = parallel_collect(avoiders.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        const long long mu = mobius_bottom(avoiders[i], std::max(kDefaultDownsetCap, hi));
        if (mu != 0) {
          out.push_back("mu(" + avoiders[i].bracket_string() + ") = " + std::to_string(mu) +
                        " despite avoiding a basis pattern");
        }
      }
      return out;
    });
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_h_set(const VerifyOptions&) {
  VerificationReport rep;
  rep.range = "n=5";
  MobiusTable table;
  const Permutation bottom({1});
  for (const Permutation& p : list_kings(5)) {
    ++rep.checked;
    const bool both = contains(p, pat2413()) && contains(p, pat3142());
    if (both != is_in_H(p)) {
      rep.failures.push_back(p.bracket_string() + ": H membership disagrees with containing both");
    }
    const long long mu = table.mobius(bottom, p);
    if ((mu == 1) != is_in_H(p) || (mu != 0 && mu != 1)) {
      rep.failures.push_back("mu(" + p.bracket_string() + ") = " + std::to_string(mu));
    }
  }
  return rep;
}

VerificationReport verify_unique_cover_zero(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 7);
  rep.range = range_string(4, hi);
  for (int n = 4; n <= hi; ++n) {
    const std::vector<Permutation> ks = list_kings(n);
    rep.checked += ks.size();
    auto failures = parallel_collect(ks.size(), opts.jobs, [&](std::size_t b, std::size_t e) {
      std::vector<std::string> out;
      for (std::size_t i = b; i < e; ++i) {
        int with_both = 0;
        for (const Permutation& q : covers_below(ks[i])) {
          if (contains(q, pat2413()) && contains(q, pat3142())) ++with_both;
        }
        if (with_both == 1) {
          const long long mu = mobius_bottom(ks[i], std::max(kDefaultDownsetCap, hi));
          if (mu != 0) {
            out.push_back("mu(" + ks[i].bracket_string() + ") = " + std::to_string(mu) +
                          " with a unique both-patterns cover");
          }
        }
      }
      return out;
    });
    rep.failures.insert(rep.failures.end(), failures.begin(), failures.end());
  }
  return rep;
}

VerificationReport verify_separator_duality(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = std::max(3, effective_max(opts, 10));
  constexpr int kSamples = 10000;
  rep.range = range_string(3, hi) + ", " + std::to_string(kSamples) + " samples";
  SplitMix64 rng{opts.seed};

  const auto check_one = [&rep](const Permutation& p) {
    const Permutation q = inverse(p);
    const Permutation r = reverse(p);
    // Inversion carries the value a of a vertical separator of p to the
    // value position_of(a), horizontal in the inverse, and vice versa.
    std::set<int> v_transported, h_transported;
    for (int a : sep_v(p)) v_transported.insert(q.at(a));
    for (int a : sep_h(p)) h_transported.insert(q.at(a));
    if (v_transported != sep_h(q) || h_transported != sep_v(q)) {
      rep.failures.push_back("inverse duality fails for " + p.bracket_string());
    }
    if (sep_v(p) != sep_v(r) || sep_h(p) != sep_h(r)) {
      rep.failures.push_back("reverse invariance fails for " + p.bracket_string());
    }
    const std::set<int> sh = sep_h(p);
    const std::set<int> sv = sep_v(p);
    if (sh.contains(1) || sh.contains(p.size()) || sv.contains(p.at(1)) ||
        sv.contains(p.at(p.size()))) {
      rep.failures.push_back("boundary restriction fails for " + p.bracket_string());
    }
  };

  const Permutation example({1, 3, 2, 4, 6, 5, 8, 7, 9});
  ++rep.checked;
  if (sep_v(example) != std::set<int>{2, 3, 6, 7} || sep_h(example) != std::set<int>{2, 3, 5, 8}) {
    rep.failures.push_back("separator sets of [132465879] are wrong");
  }
  check_one(example);
  for (int i = 0; i < kSamples; ++i) {
    const int n = 3 + rng.below(hi - 2);
    check_one(random_permutation(rng, n));
    ++rep.checked;
  }
  return rep;
}

VerificationReport verify_prolific_breadth(const VerifyOptions& opts) {
  VerificationReport rep;
  const int hi = effective_max(opts, 7);
  rep.range = range_string(2, hi);
  for (int n = 2; n <= hi; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation p(v);
      ++rep.checked;
      const bool king = is_king(p);
      const bool wide = breadth(p) >= 3;
      const bool prolific = is_k_prolific(p, 1);
      const bool all_distinct = static_cast<int>(distinct_subpatterns(p, n - 1).size()) == n;
      if (king != wide || king != prolific || king != all_distinct) {
        rep.failures.push_back(p.bracket_string() + " breaks the breadth equivalences");
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return rep;
}

VerificationReport verify_commutation(const VerifyOptions& opts) {
  VerificationReport rep;
  const int exhaustive_hi = std::min(effective_max(opts, 6), 6);
  const int random_hi = 12;
  rep.range = range_string(3, exhaustive_hi) + " exhaustive, " + range_string(3, random_hi) +
              " randomized";

  const auto check_perm = [&rep](const Permutation& p, int i, int j) {
    // j < i: deleting the later position first commutes with an index shift.
    if (delete_position(delete_position(p, i), j) !=
        delete_position(delete_position(p, j), i - 1)) {
      rep.failures.push_back("position commutation fails for " + p.bracket_string());
    }
    if (delete_value(delete_value(p, i), j) != delete_value(delete_value(p, j), i - 1)) {
      rep.failures.push_back("value commutation fails for " + p.bracket_string());
    }
  };
  const auto check_blocks = [&rep](const Permutation& p) {
    const int n = p.size();
    for (int j = 1; j < n; ++j) {
      if (std::abs(p.at(j) - p.at(j + 1)) == 1 &&
          delete_position(p, j) != delete_position(p, j + 1)) {
        rep.failures.push_back("2-block collapse fails for " + p.bracket_string());
      }
    }
    // Separator at position i between positions j and k: removing the
    // separator plus either separated entry gives the same permutation.
    for (int i = 2; i <= n - 1; ++i) {
      if (std::abs(p.at(i - 1) - p.at(i + 1)) == 1) { // vertical, j = i-1 < i < k = i+1
        if (delete_position(delete_position(p, i), i - 1) !=
            delete_position(delete_position(p, i + 1), i)) {
          rep.failures.push_back("vertical same-block identity fails for " + p.bracket_string());
        }
      }
    }
    for (int a = 2; a <= n - 1; ++a) { // horizontal with the separator to the right
      const int lo = p.position_of(a - 1);
      const int hi2 = p.position_of(a + 1);
      const int i = p.position_of(a);
      if (std::abs(lo - hi2) == 1 && i > std::max(lo, hi2)) {
        if (delete_position(delete_position(p, i), std::max(lo, hi2)) !=
            delete_position(delete_position(p, i), std::min(lo, hi2))) {
          rep.failures.push_back("horizontal same-block identity fails for " + p.bracket_string());
        }
      }
    }
  };

  for (int n = 3; n <= exhaustive_hi; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation p(v);
      for (int i = 2; i <= n; ++i) {
        for (int j = 1; j < i; ++j) {
          check_perm(p, i, j);
          ++rep.checked;
        }
      }
      check_blocks(p);
    } while (std::next_permutation(v.begin(), v.end()));
  }

  SplitMix64 rng{opts.seed};
  for (int s = 0; s < 2000; ++s) {
    const int n = 3 + rng.below(random_hi - 2);
    const Permutation p = random_permutation(rng, n);
    const int i = 2 + rng.below(n - 1);
    const int j = 1 + rng.below(i - 1);
    check_perm(p, i, j);
    check_blocks(p);
    ++rep.checked;
  }
  return rep;
}

using CheckFn = VerificationReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"counts", verify_counts},
      {"basis-containment", verify_basis_containment},
      {"grandson-son", verify_grandson_son},
      {"chain-13", verify_chain_13},
      {"strict-2block-prince", verify_strict_2block_prince},
      {"no-prince-equiv", verify_no_prince_equiv},
      {"no-prince-count", verify_no_prince_count},
      {"downset-structure", verify_downset_structure},
      {"k5-cover", verify_k5_cover},
      {"mobius-vanish", verify_mobius_vanish},
      {"h-set", verify_h_set},
      {"unique-cover-zero", verify_unique_cover_zero},
      {"separator-duality", verify_separator_duality},
      {"prolific-breadth", verify_prolific_breadth},
      {"commutation", verify_commutation},
  };
  return table;
}

} // namespace

const std::vector<std::string>& verification_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerificationReport run_verification(const std::string& id, const VerifyOptions& opts) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) {
      const auto start = Clock::now();
      VerificationReport rep = fn(opts);
      rep.theorem_id = id;
      rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return rep;
    }
  }
  throw std::invalid_argument("unknown verification id: " + id);
}

} // namespace kings

// Acceptance suite: runs the full set of structural checks end to end and
// prints one pass/fail line per criterion. Exits nonzero on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kings/deletion.hpp"
#include "kings/inflation.hpp"
#include "kings/kingdom.hpp"
#include "kings/mobius.hpp"
#include "kings/patterns.hpp"
#include "kings/poset.hpp"
#include "kings/verify.hpp"

using namespace kings;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;
double g_total_seconds = 0.0;

// Runs one criterion against its time budget; body returns an error string
// on failure.
void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<std::optional<std::string>()>& body) {
  const auto start = Clock::now();
  std::optional<std::string> error;
  try {
    error = body();
  } catch (const std::exception& e) {
    error = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  g_total_seconds += elapsed;
  if (!error && elapsed > budget_seconds) {
    error = "exceeded the " + std::to_string(budget_seconds) + " s budget";
  }
  if (error) {
    ++g_failures;
    std::printf("FAIL %2d %-22s %6.2f s  %s\n", number, name.c_str(), elapsed, error->c_str());
  } else {
    std::printf("PASS %2d %-22s %6.2f s\n", number, name.c_str(), elapsed);
  }
}

std::optional<std::string> from_report(const VerificationReport& rep) {
  if (rep.ok()) return std::nullopt;
  return rep.theorem_id + ": " + std::to_string(rep.failures.size()) +
         " failures, first: " + rep.failures.front();
}

// Each diagram must reproduce exactly and inside one second.
std::optional<std::string> expect_labels(const Permutation& root,
                                         const std::map<Permutation, long long>& expected) {
  const auto start = Clock::now();
  const KingDownset d = downset(root);
  const auto labels = mobius_downset_labels(d);
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (labels != expected) return root.bracket_string() + ": mu labels differ from the diagram";
  if (elapsed > 1.0) return root.bracket_string() + ": labeling took over one second";
  return std::nullopt;
}

} // namespace

int main() {
  const VerifyOptions opts; // single-threaded defaults

  criterion(1, "counts", 10.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("counts", opts));
  });

  criterion(2, "k4-identity", 5.0, [&]() -> std::optional<std::string> {
    const std::vector<Permutation> expected{Permutation({2, 4, 1, 3}), Permutation({3, 1, 4, 2})};
    if (list_kings(4) != expected) return "K_4 is not {[2413],[3142]}";
    return std::nullopt;
  });

  criterion(3, "basis-containment", 30.0, [&]() -> std::optional<std::string> {
    const VerificationReport rep = run_verification("basis-containment", opts);
    if (rep.checked != 2 + 14 + 90 + 646 + 5242) return "unexpected instance count";
    return from_report(rep);
  });

  criterion(4, "grandson-son", 60.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("grandson-son", opts));
  });

  criterion(5, "chain-13", 120.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("chain-13", opts));
  });

  criterion(6, "no-prince-count", 60.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("no-prince-count", opts));
  });

  criterion(7, "no-prince-equiv", 60.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("no-prince-equiv", opts));
  });

  criterion(8, "k5-cover", 30.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("k5-cover", opts));
  });

  criterion(9, "mobius-figures", 2.0, [&]() -> std::optional<std::string> {
    const Permutation k1({1}), k2413({2, 4, 1, 3}), k3142({3, 1, 4, 2});
    if (auto err = expect_labels(
            Permutation({5, 2, 4, 6, 1, 7, 3}),
            {{k1, 1},
             {k2413, -1},
             {k3142, -1},
             {Permutation({2, 4, 1, 5, 3}), 1},
             {Permutation({4, 2, 5, 1, 3}), 1},
             {Permutation({4, 1, 3, 5, 2}), 0},
             {Permutation({5, 2, 4, 1, 3}), 0},
             {Permutation({4, 2, 5, 1, 6, 3}), -1},
             {Permutation({5, 2, 4, 1, 6, 3}), 0},
             {Permutation({5, 2, 4, 6, 1, 3}), 0},
             {Permutation({5, 2, 4, 6, 1, 7, 3}), 0}})) {
      return err;
    }
    if (downset(Permutation({5, 2, 4, 6, 1, 7, 3})).cover_edges.size() != 19) {
      return std::string("the [5246173] diagram should have 19 cover edges");
    }
    return expect_labels(Permutation({5, 2, 4, 1, 6, 3}),
                         {{k1, 1},
                          {k2413, -1},
                          {k3142, -1},
                          {Permutation({2, 4, 1, 5, 3}), 1},
                          {Permutation({4, 1, 3, 5, 2}), 0},
                          {Permutation({5, 2, 4, 1, 3}), 0},
                          {Permutation({5, 2, 4, 1, 6, 3}), 0}});
  });

  criterion(10, "mobius-vanish", 120.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("mobius-vanish", opts));
  });

  criterion(11, "h-set", 10.0, [&]() -> std::optional<std::string> {
    return from_report(run_verification("h-set", opts));
  });

  criterion(12, "final-h-instance", 10.0, [&]() -> std::optional<std::string> {
    const Permutation sigma({6, 2, 4, 1, 5, 3, 7});
    if (mobius_bottom(sigma) != 0) return std::string("mu([6241537]) != 0");
    int h_below = 0;
    for (const Permutation& q : king_subpatterns(sigma)) {
      if (is_in_H(q)) ++h_below;
    }
    if (h_below != 1) return "downset of [6241537] holds " + std::to_string(h_below) +
                             " H elements, expected 1";
    return std::nullopt;
  });

  criterion(13, "separators", 30.0, [&]() -> std::optional<std::string> {
    const Permutation example({1, 3, 2, 4, 6, 5, 8, 7, 9});
    if (sep_v(example) != std::set<int>{2, 3, 6, 7}) return std::string("Sep_v example wrong");
    if (sep_h(example) != std::set<int>{2, 3, 5, 8}) return std::string("Sep_h example wrong");
    return from_report(run_verification("separator-duality", opts));
  });

  criterion(14, "deletion-bookkeeping", 10.0, [&]() -> std::optional<std::string> {
    const Permutation sigma({5, 7, 1, 3, 8, 6, 2, 4, 9});
    const std::vector<Permutation> up = delete_values_trace(sigma, std::vector<int>{1, 2, 7, 8});
    const std::vector<Permutation> expected_up{
        Permutation({4, 6, 2, 7, 5, 1, 3, 8}), Permutation({3, 5, 1, 6, 4, 2, 7}),
        Permutation({3, 1, 5, 4, 2, 6}), Permutation({3, 1, 4, 2, 5})};
    if (up != expected_up) return std::string("ascending deletion run diverges");
    const std::vector<Permutation> down = delete_values_trace(sigma, std::vector<int>{8, 7, 2, 1});
    const std::vector<Permutation> expected_down{
        Permutation({5, 7, 1, 3, 6, 2, 4, 8}), Permutation({5, 1, 3, 6, 2, 4, 7}),
        Permutation({4, 1, 2, 5, 3, 6}), Permutation({3, 1, 4, 2, 5})};
    if (down != expected_down) return std::string("descending deletion run diverges");

    const Permutation t({7, 4, 2, 6, 1, 5, 3});
    struct Edge {
      Permutation from;
      int value;
      Permutation to;
    };
    const Permutation n625143({6, 2, 5, 1, 4, 3}), n631542({6, 3, 1, 5, 4, 2});
    const Permutation n642513({6, 4, 2, 5, 1, 3}), n642153({6, 4, 2, 1, 5, 3});
    const Permutation n632514({6, 3, 2, 5, 1, 4});
    const Permutation b51432({5, 1, 4, 3, 2}), b53142({5, 3, 1, 4, 2}), b52413({5, 2, 4, 1, 3});
    const std::vector<Edge> diagrams{
        // commutation square
        {t, 4, n625143}, {t, 1, n631542}, {n625143, 1, b51432}, {n631542, 3, b51432},
        // vertical separator diamond
        {t, 5, n642513}, {t, 6, n642153},
        {n631542, 4, b53142}, {n631542, 5, b53142},
        {n642513, 1, b53142}, {n642153, 1, b53142},
        // horizontal separator diamond
        {t, 3, n632514},
        {n625143, 3, b52413}, {n625143, 4, b52413},
        {n632514, 3, b52413}, {n642513, 4, b52413}};
    for (const Edge& e : diagrams) {
      if (delete_value(e.from, e.value) != e.to) {
        return e.from.bracket_string() + " minus " + std::to_string(e.value) +
               " is not " + e.to.bracket_string();
      }
    }
    return std::nullopt;
  });

  criterion(15, "density-trend", 10.0, [&]() -> std::optional<std::string> {
    const double ratio = static_cast<double>(count_kings(9)) / 362880.0;
    if (!(ratio > 0.12 && ratio < 0.145)) {
      return "|K_9|/9! = " + std::to_string(ratio) + " outside (0.12, 0.145)";
    }
    return std::nullopt;
  });

  std::printf("----\n%s: 15 criteria, %d failed, %.2f s total\n",
              g_failures == 0 ? "PASS" : "FAIL", g_failures, g_total_seconds);
  if (g_total_seconds > 300.0) {
    std::printf("FAIL total runtime exceeded the five minute budget\n");
    return 1;
  }
  return g_failures == 0 ? 0 : 1;
}

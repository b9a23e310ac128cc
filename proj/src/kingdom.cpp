#include "kings/kingdom.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <numeric>
#include <stdexcept>

#include "kings/deletion.hpp"
#include "kings/inflation.hpp"

namespace kings {

namespace {

constexpr int kMaxEnumerableSize = 63; // used-value bitmask width

struct Generator {
  int n;
  const std::function<bool(const Permutation&)>& visit;
  std::vector<int> prefix;
  std::uint64_t used = 0;
  bool stopped = false;

  void extend() {
    if (stopped) return;
    if (static_cast<int>(prefix.size()) == n) {
      if (!visit(Permutation(prefix))) stopped = true;
      return;
    }
    const int last = prefix.empty() ? 0 : prefix.back();
    for (int v = 1; v <= n && !stopped; ++v) {
      if (used & (std::uint64_t{1} << v)) continue;
      if (last != 0 && std::abs(v - last) == 1) continue;
      used |= std::uint64_t{1} << v;
      prefix.push_back(v);
      extend();
      prefix.pop_back();
      used &= ~(std::uint64_t{1} << v);
    }
  }
};

std::uint64_t count_from(int n, std::uint64_t used, int last, int depth) {
  if (depth == n) return 1;
  std::uint64_t total = 0;
  for (int v = 1; v <= n; ++v) {
    if (used & (std::uint64_t{1} << v)) continue;
    if (last != 0 && std::abs(v - last) == 1) continue;
    total += count_from(n, used | (std::uint64_t{1} << v), v, depth + 1);
  }
  return total;
}

} // namespace

void generate_kings(int n, const std::function<bool(const Permutation&)>& visit) {
  if (n < 1 || n > kMaxEnumerableSize) throw std::invalid_argument("enumeration size out of range");
  Generator g{n, visit, {}, 0, false};
  g.prefix.reserve(static_cast<std::size_t>(n));
  g.extend();
}

std::vector<Permutation> list_kings(int n) {
  std::vector<Permutation> out;
  generate_kings(n, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t count_kings(int n, int jobs) {
  if (n < 1 || n > kMaxEnumerableSize) throw std::invalid_argument("enumeration size out of range");
  if (jobs <= 1 || n == 1) return count_from(n, 0, 0, 0);
  // Partition the search by first value; each worker sums a stripe of the
  // n independent branches.
  const int workers = std::min(jobs, n);
  std::vector<std::future<std::uint64_t>> stripes;
  stripes.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    stripes.push_back(std::async(std::launch::async, [n, w, workers] {
      std::uint64_t sum = 0;
      for (int v = w + 1; v <= n; v += workers) {
        sum += count_from(n, std::uint64_t{1} << v, v, 1);
      }
      return sum;
    }));
  }
  std::uint64_t total = 0;
  for (auto& s : stripes) total += s.get();
  return total;
}

KingCensus census(int n, bool materialize, int jobs) {
  KingCensus out;
  out.n = n;
  if (materialize) {
    out.kings = list_kings(n);
    out.count = out.kings->size();
  } else {
    out.count = count_kings(n, jobs);
  }
  return out;
}

std::set<Permutation> princes(const Permutation& p) {
  if (!is_king(p)) throw std::invalid_argument("princes are only defined for kings");
  if (p.size() < 2) throw std::invalid_argument("princes require n >= 2");
  std::set<Permutation> out;
  for (int v = 1; v <= p.size(); ++v) {
    Permutation q = delete_value(p, v);
    if (is_king(q)) out.insert(std::move(q));
  }
  return out;
}

bool has_prince(const Permutation& p) {
  if (!is_king(p)) throw std::invalid_argument("princes are only defined for kings");
  if (p.size() < 2) throw std::invalid_argument("princes require n >= 2");
  for (int v = 1; v <= p.size(); ++v) {
    if (is_king(delete_value(p, v))) return true;
  }
  return false;
}

std::set<Permutation> kings_without_princes(int n) {
  if (n < 4) throw std::invalid_argument("kings without princes require n >= 4");
  std::set<Permutation> out;
  if (n % 4 != 0) return out;
  const int k = n / 4;
  const std::vector<Permutation> cell = {Permutation({2, 4, 1, 3}), Permutation({3, 1, 4, 2})};
  std::vector<int> skeleton(static_cast<std::size_t>(k));
  std::iota(skeleton.begin(), skeleton.end(), 1);
  do {
    const Permutation skel(skeleton);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<Permutation> comps;
      comps.reserve(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) comps.push_back(cell[(mask >> i) & 1u]);
      out.insert(inflate(skel, comps));
    }
  } while (std::next_permutation(skeleton.begin(), skeleton.end()));
  return out;
}

std::set<Permutation> kings_without_princes_filtered(int n) {
  if (n < 4) throw std::invalid_argument("kings without princes require n >= 4");
  std::set<Permutation> out;
  generate_kings(n, [&](const Permutation& p) {
    if (!has_prince(p)) out.insert(p);
    return true;
  });
  return out;
}

} // namespace kings

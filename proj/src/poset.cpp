#include "kings/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kings/deletion.hpp"
#include "kings/mobius.hpp"
#include "kings/patterns.hpp"

namespace kings {

namespace {

void check_downset_root(const Permutation& root, int size_cap) {
  if (!is_king(root)) throw std::invalid_argument("downsets are only built over kings");
  if (root.size() > size_cap) {
    throw std::invalid_argument("root size " + std::to_string(root.size()) +
                                " exceeds the downset cap of " + std::to_string(size_cap) +
                                "; pass a larger cap to override");
  }
}

} // namespace

std::set<Permutation> king_subpatterns(const Permutation& root, int size_cap) {
  check_downset_root(root, size_cap);
  std::set<Permutation> nodes;
  const int n = root.size();
  std::vector<int> picked;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    picked.clear();
    for (int pos = 1; pos <= n; ++pos) {
      if (mask & (std::uint64_t{1} << (pos - 1))) picked.push_back(root.at(pos));
    }
    Permutation q = standardize(picked);
    if (is_king(q)) nodes.insert(std::move(q));
  }
  return nodes;
}

KingDownset downset(const Permutation& root, int size_cap) {
  const std::set<Permutation> node_set = king_subpatterns(root, size_cap);
  KingDownset d{root, {node_set.begin(), node_set.end()}, {}};

  // Size-layered transitive reduction: (q, p) is a cover iff q < p in
  // containment and no node r of intermediate size sits strictly between.
  const auto below = [&](const Permutation& lo, const Permutation& hi) {
    return lo.size() < hi.size() && contains(hi, lo);
  };
  for (const Permutation& q : d.nodes) {
    for (const Permutation& p : d.nodes) {
      if (!below(q, p)) continue;
      bool covered = true;
      for (const Permutation& r : d.nodes) {
        if (r.size() <= q.size() || r.size() >= p.size()) continue;
        if (below(q, r) && below(r, p)) {
          covered = false;
          break;
        }
      }
      if (covered) d.cover_edges.emplace_back(q, p);
    }
  }
  std::sort(d.cover_edges.begin(), d.cover_edges.end());
  return d;
}

std::set<Permutation> interval(const Permutation& tau, const Permutation& sigma, bool half_open) {
  if (!is_king(tau) || !is_king(sigma)) {
    throw std::invalid_argument("intervals are only defined between kings");
  }
  std::set<Permutation> out;
  if (tau.size() > sigma.size() || !contains(sigma, tau)) return out;
  if (tau == sigma) {
    if (!half_open) out.insert(sigma);
    return out;
  }
  for (int k = tau.size(); k < sigma.size(); ++k) {
    for (const Permutation& q : distinct_subpatterns(sigma, k)) {
      if (is_king(q) && contains(q, tau)) out.insert(q);
    }
  }
  if (!half_open) out.insert(sigma);
  return out;
}

std::set<Permutation> covers_below(const Permutation& p) {
  if (!is_king(p)) throw std::invalid_argument("covers are only defined for kings");
  std::set<Permutation> strictly_below;
  for (int k = 1; k < p.size(); ++k) {
    for (const Permutation& q : distinct_subpatterns(p, k)) {
      if (is_king(q)) strictly_below.insert(q);
    }
  }
  std::set<Permutation> out;
  for (const Permutation& q : strictly_below) {
    bool maximal = true;
    for (const Permutation& r : strictly_below) {
      if (q.size() < r.size() && contains(r, q)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(q);
  }
  return out;
}

std::set<std::pair<int, int>> deletion_pairs(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size() + 2) {
    throw std::invalid_argument("deletion pairs need |sigma| = |pi| + 2");
  }
  std::set<std::pair<int, int>> out;
  for (int i = 2; i <= sigma.size(); ++i) {
    const Permutation first = delete_position(sigma, i);
    for (int j = 1; j < i; ++j) {
      if (delete_position(first, j) == pi) out.insert({i, j});
    }
  }
  return out;
}

std::optional<Permutation> intermediate_king(const Permutation& sigma, const Permutation& pi) {
  if (!is_king(sigma) || !is_king(pi)) {
    throw std::invalid_argument("intermediate king requires king endpoints");
  }
  if (sigma.size() != pi.size() + 2) {
    throw std::invalid_argument("intermediate king needs |sigma| = |pi| + 2");
  }
  if (sigma.size() <= 4) throw std::invalid_argument("intermediate king requires |sigma| > 4");
  if (!contains(sigma, pi)) throw std::invalid_argument("pi must be contained in sigma");
  for (int v = 1; v <= sigma.size(); ++v) {
    Permutation tau = delete_value(sigma, v);
    if (is_king(tau) && contains(tau, pi)) return tau;
  }
  return std::nullopt;
}

namespace {

// Descends from cur toward pi, preferring a one-step drop (a prince of cur
// still above pi) and falling back to a three-step drop. A valid next step
// always exists, but dead ends would backtrack.
bool descend_chain(const Permutation& cur, const Permutation& pi, std::vector<Permutation>& path) {
  const int gap = cur.size() - pi.size();
  if (gap == 1 || gap == 3) {
    path.push_back(pi);
    return true;
  }
  std::set<Permutation> princes_above;
  for (int v = 1; v <= cur.size(); ++v) {
    Permutation tau = delete_value(cur, v);
    if (is_king(tau) && contains(tau, pi)) princes_above.insert(std::move(tau));
  }
  std::set<Permutation> three_below;
  if (gap >= 4) {
    for (const Permutation& tau : distinct_subpatterns(cur, cur.size() - 3)) {
      if (is_king(tau) && contains(tau, pi)) three_below.insert(tau);
    }
  }
  for (const auto* candidates : {&princes_above, &three_below}) {
    for (const Permutation& tau : *candidates) {
      path.push_back(tau);
      if (descend_chain(tau, pi, path)) return true;
      path.pop_back();
    }
  }
  return false;
}

} // namespace

Chain find_chain(const Permutation& pi, const Permutation& sigma) {
  if (!is_king(pi) || !is_king(sigma)) {
    throw std::invalid_argument("chains are only defined between kings");
  }
  if (pi == sigma || pi.size() >= sigma.size() || !contains(sigma, pi)) {
    throw std::invalid_argument("chain requires pi strictly contained in sigma");
  }
  std::vector<Permutation> path{sigma};
  if (!descend_chain(sigma, pi, path)) {
    throw std::logic_error("no {1,3}-gap chain between comparable kings; internal inconsistency");
  }
  std::reverse(path.begin(), path.end());
  return Chain{std::move(path)};
}

std::string hasse_dot(const KingDownset& d, bool with_mobius) {
  std::map<Permutation, long long> labels;
  if (with_mobius) labels = mobius_downset_labels(d);
  std::ostringstream os;
  os << "digraph downset {\n";
  os << "  rankdir=BT;\n";
  for (const Permutation& p : d.nodes) {
    os << "  \"" << p.bracket_string() << "\"";
    if (with_mobius) {
      os << " [label=\"" << p.bracket_string() << "\\nmu=" << labels.at(p) << "\"]";
    }
    os << ";\n";
  }
  for (const auto& [lower, upper] : d.cover_edges) {
    os << "  \"" << lower.bracket_string() << "\" -> \"" << upper.bracket_string() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace kings

#include "kings/deletion.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kings {

Permutation delete_position(const Permutation& p, int i) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("cannot delete from a permutation of size 1");
  if (i < 1 || i > n) throw std::invalid_argument("position " + std::to_string(i) + " out of range");
  const int removed = p.at(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - 1);
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    const int v = p.at(k);
    out.push_back(v < removed ? v : v - 1);
  }
  return Permutation(std::move(out));
}

Permutation delete_value(const Permutation& p, int v) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("cannot delete from a permutation of size 1");
  if (v < 1 || v > n) throw std::invalid_argument("value " + std::to_string(v) + " out of range");
  return delete_position(p, p.position_of(v));
}

std::vector<Permutation> delete_values_trace(const Permutation& p,
                                             std::span<const int> original_values) {
  const int n = p.size();
  if (original_values.empty() || static_cast<int>(original_values.size()) >= n) {
    throw std::invalid_argument("must delete between 1 and n-1 values");
  }
  std::vector<int> deleted;
  std::vector<Permutation> trace;
  Permutation cur = p;
  for (int v : original_values) {
    if (v < 1 || v > n) throw std::invalid_argument("value " + std::to_string(v) + " out of range");
    if (std::find(deleted.begin(), deleted.end(), v) != deleted.end()) {
      throw std::invalid_argument("duplicate value " + std::to_string(v) + " in deletion sequence");
    }
    // The current name of original value v drops by one for each smaller
    // value already removed.
    int shift = 0;
    for (int d : deleted) {
      if (d < v) ++shift;
    }
    cur = delete_value(cur, v - shift);
    deleted.push_back(v);
    trace.push_back(cur);
  }
  return trace;
}

Permutation delete_values(const Permutation& p, std::span<const int> original_values) {
  return delete_values_trace(p, original_values).back();
}

std::vector<SeparatorReport> separators(const Permutation& p) {
  const int n = p.size();
  if (n < 3) throw std::invalid_argument("separators require n >= 3");
  std::vector<SeparatorReport> out;
  for (int a = 1; a <= n; ++a) {
    SeparatorReport rep;
    rep.value = a;
    const int i = p.position_of(a);
    if (i >= 2 && i <= n - 1 && std::abs(p.at(i - 1) - p.at(i + 1)) == 1) {
      rep.vertical = true;
      rep.vertical_witness = {i - 1, i, i + 1};
    }
    if (a >= 2 && a <= n - 1) {
      const int lo = p.position_of(a - 1);
      const int hi = p.position_of(a + 1);
      if (std::abs(lo - hi) == 1) {
        rep.horizontal = true;
        rep.horizontal_witness = {std::min(lo, hi), std::max(lo, hi)};
      }
    }
    if (rep.vertical || rep.horizontal) out.push_back(rep);
  }
  return out;
}

std::set<int> sep_v(const Permutation& p) {
  std::set<int> out;
  for (const SeparatorReport& r : separators(p)) {
    if (r.vertical) out.insert(r.value);
  }
  return out;
}

std::set<int> sep_h(const Permutation& p) {
  std::set<int> out;
  for (const SeparatorReport& r : separators(p)) {
    if (r.horizontal) out.insert(r.value);
  }
  return out;
}

} // namespace kings

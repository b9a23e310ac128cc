#include "kings/mobius.hpp"

#include <array>
#include <stdexcept>

#include "kings/patterns.hpp"

namespace kings {

namespace {

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("mobius sum overflow");
  return out;
}

} // namespace

MobiusTable::MobiusTable(int size_cap, bool vanishing_shortcut)
    : size_cap_(size_cap), vanishing_shortcut_(vanishing_shortcut) {}

long long MobiusTable::mobius(const Permutation& tau, const Permutation& sigma) {
  if (!is_king(tau) || !is_king(sigma)) {
    throw std::invalid_argument("mobius is defined on the king poset");
  }
  if (sigma.size() > size_cap_) {
    throw std::invalid_argument("mobius upper argument exceeds the size cap of " +
                                std::to_string(size_cap_) + "; pass a larger cap to override");
  }
  return eval(tau, sigma);
}

long long MobiusTable::eval(const Permutation& tau, const Permutation& sigma) {
  if (tau == sigma) return 1;
  if (tau.size() >= sigma.size() || !contains(sigma, tau)) return 0;
  const auto key = std::make_pair(tau, sigma);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  long long value = 0;
  if (vanishing_shortcut_ && tau.size() == 1 && sigma.size() >= 5 &&
      (avoids(sigma, Permutation({2, 4, 1, 3})) || avoids(sigma, Permutation({3, 1, 4, 2})))) {
    value = 0;
  } else {
    long long total = 0;
    for (const Permutation& pi : interval(tau, sigma, /*half_open=*/true)) {
      total = checked_add(total, eval(tau, pi));
    }
    value = checked_add(0, -total);
  }
  entries_.emplace(key, value);
  return value;
}

long long mobius(const Permutation& tau, const Permutation& sigma, int size_cap) {
  return MobiusTable(size_cap).mobius(tau, sigma);
}

long long mobius_bottom(const Permutation& sigma, int size_cap) {
  return mobius(Permutation({1}), sigma, size_cap);
}

bool is_in_H(const Permutation& p) {
  static const std::array<Permutation, 4> H = {
      Permutation({2, 4, 1, 5, 3}),
      Permutation({3, 5, 1, 4, 2}),
      Permutation({4, 2, 5, 1, 3}),
      Permutation({3, 1, 5, 2, 4}),
  };
  for (const Permutation& h : H) {
    if (p == h) return true;
  }
  return false;
}

std::map<Permutation, long long> mobius_downset_labels(const KingDownset& d) {
  MobiusTable table(std::max(kDefaultDownsetCap, d.root.size()));
  const Permutation bottom({1});
  std::map<Permutation, long long> out;
  for (const Permutation& p : d.nodes) out.emplace(p, table.mobius(bottom, p));
  return out;
}

} // namespace kings

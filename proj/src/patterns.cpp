#include "kings/patterns.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace kings {

namespace {

// Backtracking matcher over host positions. For pattern index t, candidate
// host values are pruned against the tightest already-matched values whose
// pattern ranks are the predecessor/successor of pattern rank t.
class Matcher {
 public:
  Matcher(const Permutation& host, const Permutation& pattern)
      : host_(host), k_(pattern.size()), lower_(k_, -1), upper_(k_, -1) {
    for (int t = 0; t < k_; ++t) {
      int best_lo = 0;
      int best_hi = std::numeric_limits<int>::max();
      for (int j = 0; j < t; ++j) {
        const int pj = pattern.at(j + 1);
        const int pt = pattern.at(t + 1);
        if (pj < pt && pj > best_lo) {
          best_lo = pj;
          lower_[t] = j;
        }
        if (pj > pt && pj < best_hi) {
          best_hi = pj;
          upper_[t] = j;
        }
      }
    }
  }

  // Calls visit(positions) for each occurrence in lexicographic position
  // order; stops early when visit returns false.
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    if (k_ > host_.size()) return;
    positions_.clear();
    chosen_.clear();
    descend(1, visit);
  }

 private:
  bool descend(int from, const std::function<bool(const std::vector<int>&)>& visit) {
    const int t = static_cast<int>(positions_.size());
    if (t == k_) return visit(positions_);
    const int n = host_.size();
    for (int pos = from; pos <= n - (k_ - t) + 1; ++pos) {
      const int v = host_.at(pos);
      if (lower_[t] != -1 && v <= chosen_[static_cast<std::size_t>(lower_[t])]) continue;
      if (upper_[t] != -1 && v >= chosen_[static_cast<std::size_t>(upper_[t])]) continue;
      positions_.push_back(pos);
      chosen_.push_back(v);
      const bool keep_going = descend(pos + 1, visit);
      positions_.pop_back();
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Permutation& host_;
  int k_;
  std::vector<int> lower_, upper_;
  std::vector<int> positions_;
  std::vector<int> chosen_;
};

} // namespace

bool contains(const Permutation& host, const Permutation& pattern) {
  bool found = false;
  Matcher(host, pattern).run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

bool avoids(const Permutation& host, const Permutation& pattern) {
  return !contains(host, pattern);
}

std::vector<PatternOccurrence> occurrences(const Permutation& host, const Permutation& pattern) {
  std::vector<PatternOccurrence> out;
  Matcher(host, pattern).run([&](const std::vector<int>& positions) {
    out.push_back(PatternOccurrence{positions, pattern});
    return true;
  });
  return out;
}

std::set<Permutation> distinct_subpatterns(const Permutation& host, int k) {
  const int n = host.size();
  if (k < 1 || k > n) throw std::invalid_argument("subpattern size must be in 1..n");
  std::set<Permutation> out;
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(k));
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(picked.size()) == k) {
      out.insert(standardize(picked));
      return;
    }
    const int remaining = k - static_cast<int>(picked.size());
    for (int pos = from; pos <= n - remaining + 1; ++pos) {
      picked.push_back(host.at(pos));
      choose(pos + 1);
      picked.pop_back();
    }
  };
  choose(1);
  return out;
}

} // namespace kings

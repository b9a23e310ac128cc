#include "kings/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kings {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

} // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  require(!values_.empty(), "permutation must have size >= 1");
  const int n = static_cast<int>(values_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    require(v >= 1 && v <= n, "entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    require(!seen[static_cast<std::size_t>(v)], "duplicate entry " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  require(n >= 1, "permutation must have size >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  auto drop = [&](auto pred) {
    s.erase(std::remove_if(s.begin(), s.end(), pred), s.end());
  };
  // Surrounding brackets are tolerated so printed output parses back.
  drop([](char c) { return c == '[' || c == ']'; });
  const bool separated = s.find_first_of(", \t") != std::string::npos;
  std::vector<int> vals;
  if (separated) {
    std::string item;
    for (char c : s + ",") {
      if (c == ',' || c == ' ' || c == '\t') {
        if (!item.empty()) {
          vals.push_back(std::stoi(item));
          item.clear();
        }
      } else {
        require(std::isdigit(static_cast<unsigned char>(c)) != 0,
                "invalid character in permutation: " + std::string(1, c));
        item.push_back(c);
      }
    }
  } else {
    for (char c : s) {
      require(std::isdigit(static_cast<unsigned char>(c)) != 0,
              "invalid character in permutation: " + std::string(1, c));
      vals.push_back(c - '0'); // compact form, one digit per value
    }
  }
  require(!vals.empty(), "empty permutation text");
  return Permutation(std::move(vals));
}

int Permutation::at(int pos) const {
  require(pos >= 1 && pos <= size(), "position " + std::to_string(pos) + " out of range");
  return values_[static_cast<std::size_t>(pos - 1)];
}

int Permutation::position_of(int value) const {
  require(value >= 1 && value <= size(), "value " + std::to_string(value) + " out of range");
  for (int i = 0; i < size(); ++i) {
    if (values_[static_cast<std::size_t>(i)] == value) return i + 1;
  }
  return 0; // unreachable: values are a bijection
}

std::string Permutation::bracket_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) {
    if (i > 0) os << ',';
    os << values_[static_cast<std::size_t>(i)];
  }
  os << ']';
  return os.str();
}

std::string Permutation::compact_string() const {
  require(size() <= 9, "compact form only defined for n <= 9");
  std::string s;
  for (int v : values_) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::string Permutation::display_string() const {
  if (size() <= 9) return bracket_string() + " (" + compact_string() + ")";
  return bracket_string();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.bracket_string();
}

Permutation standardize(std::span<const int> seq) {
  require(!seq.empty(), "cannot standardize an empty sequence");
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "cannot standardize a sequence with duplicate entries");
  std::vector<int> out;
  out.reserve(seq.size());
  for (int x : seq) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) q[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(q));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

int manhattan_distance(const Permutation& p, int i, int j) {
  return std::abs(i - j) + std::abs(p.at(i) - p.at(j));
}

int breadth(const Permutation& p) {
  const int n = p.size();
  require(n >= 2, "breadth requires n >= 2");
  int best = manhattan_distance(p, 1, 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      best = std::min(best, manhattan_distance(p, i, j));
    }
  }
  return best;
}

bool is_king(const Permutation& p) {
  for (int i = 2; i <= p.size(); ++i) {
    if (std::abs(p.at(i) - p.at(i - 1)) == 1) return false;
  }
  return true;
}

std::set<BlockSpan> blocks(const Permutation& p) {
  const int n = p.size();
  std::set<BlockSpan> out;
  for (int s = 1; s <= n; ++s) {
    int lo = p.at(s);
    int hi = lo;
    for (int e = s; e <= n; ++e) {
      lo = std::min(lo, p.at(e));
      hi = std::max(hi, p.at(e));
      if (hi - lo == e - s) out.insert(BlockSpan{s, e - s + 1});
    }
  }
  return out;
}

std::set<BlockSpan> strict_k_blocks(const Permutation& p, int k) {
  const int n = p.size();
  require(k >= 1 && k <= n, "block length must be in 1..n");
  const std::set<BlockSpan> all = blocks(p);
  std::set<BlockSpan> out;
  for (const BlockSpan& b : all) {
    if (b.length != k) continue;
    // The only (k+1)-blocks that can contain b extend it one step left or right.
    const bool widened = all.contains(BlockSpan{b.start - 1, k + 1}) ||
                         all.contains(BlockSpan{b.start, k + 1});
    if (!widened) out.insert(b);
  }
  return out;
}

bool is_simple(const Permutation& p) {
  const int n = p.size();
  for (const BlockSpan& b : blocks(p)) {
    if (b.length != 1 && b.length != n) return false;
  }
  return true;
}

bool is_k_prolific(const Permutation& p, int k) {
  require(k >= 1, "k must be positive");
  return breadth(p) >= k + 2;
}

std::string ascii_plot(const Permutation& p) {
  const int n = p.size();
  require(n <= 40, "plot only renders permutations up to n = 40");
  std::string out;
  out.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1));
  for (int row = n; row >= 1; --row) {
    for (int col = 1; col <= n; ++col) {
      out.push_back(p.at(col) == row ? '*' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

} // namespace kings

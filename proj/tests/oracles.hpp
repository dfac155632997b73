#pragma once

// Brute-force reference implementations. They work on plain strings and
// integers, restate each definition directly and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Bits = std::string;

// All binary words of length <= max_len, by length and then lexicographically.
inline std::vector<Bits> enumerate_words(std::size_t max_len) {
  std::vector<Bits> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    out.push_back(out[i] + "0");
    out.push_back(out[i] + "1");
  }
  std::stable_sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline std::vector<Bits> all_of_length(std::size_t n) {
  std::vector<Bits> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    Bits w(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if ((v >> (n - 1 - i)) & 1U) w[i] = '1';
    out.push_back(w);
  }
  return out;
}

// Length-then-lex index: count the shorter words, then read w as a binary number.
inline std::uint64_t psi_index(const Bits& w) {
  std::uint64_t shorter = (std::uint64_t{1} << w.size()) - 1;
  std::uint64_t rank = 0;
  for (char c : w) rank = 2 * rank + (c == '1' ? 1 : 0);
  return shorter + rank;
}

inline Bits psi(std::uint64_t n) {
  std::size_t len = 0;
  while (n >= (std::uint64_t{1} << (len + 1)) - 1) ++len;
  const std::uint64_t rank = n - ((std::uint64_t{1} << len) - 1);
  Bits w(len, '0');
  for (std::size_t i = 0; i < len; ++i)
    if ((rank >> (len - 1 - i)) & 1U) w[i] = '1';
  return w;
}

inline Bits dense(std::uint64_t n) {
  Bits w = psi(n);
  w.resize(static_cast<std::size_t>(n), '0');
  return w;
}

inline std::size_t ones(const Bits& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), '1')); }

inline std::vector<std::size_t> occurrences(const Bits& s, const Bits& t) {
  std::vector<std::size_t> out;
  if (s.size() > t.size()) return out;
  for (std::size_t l = 0; l + s.size() <= t.size(); ++l)
    if (t.compare(l, s.size(), s) == 0) out.push_back(l);
  return out;
}

inline std::uint64_t ruler(std::uint64_t i) {
  std::uint64_t v = i + 1, r = 0;
  while (v % 2 == 0) {
    v /= 2;
    ++r;
  }
  return r;
}

// Eventually periodic point given by a preperiod and a nonempty period.
struct Point {
  Bits pre;
  Bits period;
  int bit(std::size_t i) const {
    const char c = i < pre.size() ? pre[i] : period[(i - pre.size()) % period.size()];
    return c == '1' ? 1 : 0;
  }
  Bits prefix(std::size_t n) const {
    Bits w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(bit(i) ? '1' : '0');
    return w;
  }
  std::string text() const { return pre + "|" + period; }
};

inline int gamma(const Point& a, std::uint64_t n) {
  if (n % 2 == 1) return a.bit(static_cast<std::size_t>((n - 1) / 2));
  return static_cast<int>((n / 2) % 2);
}

inline int beta(const Point& a, std::uint64_t i) { return gamma(a, ruler(i)); }

inline Bits beta_word(const Point& a, std::size_t len) {
  Bits w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(beta(a, i) ? '1' : '0');
  return w;
}

// Membership bitmap on [0, upto] of the partial sums of 1 + b(i).
inline std::vector<bool> partial_sums(const std::function<std::uint64_t(std::uint64_t)>& b, std::uint64_t upto) {
  std::vector<bool> in(upto + 1, false);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; sum <= upto; ++i) {
    in[sum] = true;
    sum += 1 + b(i);
  }
  return in;
}

inline std::vector<bool> modular(std::uint64_t m, const std::set<std::uint64_t>& f, std::uint64_t upto) {
  std::vector<bool> in(upto + 1);
  for (std::uint64_t n = 0; n <= upto; ++n) in[n] = n % m == 0 || f.count(n % m) != 0;
  return in;
}

// Level graph of the label tree: e ~ f iff e = th_k 0 w and f = th_k 1 w.
inline bool edge(const std::function<Bits(std::size_t)>& theta, const Bits& e, const Bits& f) {
  if (e.size() != f.size()) return false;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const Bits th = theta(k);
    const Bits w = e.substr(k + 1);
    if (e == th + "0" + w && f == th + "1" + w) return true;
  }
  return false;
}

inline std::vector<Bits> dfs_path(const std::function<Bits(std::size_t)>& theta, const Bits& from, const Bits& to) {
  const std::vector<Bits> level = all_of_length(from.size());
  std::map<Bits, std::vector<Bits>> adj;
  for (const Bits& a : level)
    for (const Bits& b : level)
      if (edge(theta, a, b)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  std::vector<Bits> path{from};
  std::set<Bits> seen{from};
  std::function<bool()> go = [&]() {
    if (path.back() == to) return true;
    for (const Bits& n : adj[path.back()]) {
      if (seen.count(n)) continue;
      seen.insert(n);
      path.push_back(n);
      if (go()) return true;
      path.pop_back();
    }
    return false;
  };
  if (!go()) return {};
  return path;
}

// (x, y) in A^S: x = u0z and y = u1z with the number of ones in u in S.
// Tails are compared on a window long enough for both periods to cycle.
inline bool as_related(const Point& x, const Point& y, const std::function<bool(std::uint64_t)>& in_s) {
  const std::size_t horizon = 2 * (x.pre.size() + y.pre.size() + 2) + 4 * x.period.size() * y.period.size() + 8;
  const Bits xs = x.prefix(horizon + 1), ys = y.prefix(horizon + 1);
  for (std::size_t k = 0; k < horizon; ++k) {
    if (xs.compare(0, k, ys, 0, k) != 0) return false;
    if (xs[k] == '0' && ys[k] == '1') {
      if (xs.substr(k + 1) != ys.substr(k + 1)) return false;
      return in_s(ones(xs.substr(0, k)));
    }
    if (xs[k] != ys[k]) return false;
  }
  return false;
}

// Finite relation as a set of pairs.
using Rel = std::set<std::pair<int, int>>;

inline bool reflexive(const Rel& r, int n) {
  for (int x = 0; x < n; ++x)
    if (!r.count({x, x})) return false;
  return true;
}
inline bool irreflexive(const Rel& r) {
  for (auto [x, y] : r)
    if (x == y) return false;
  return true;
}
inline bool symmetric(const Rel& r) {
  for (auto [x, y] : r)
    if (!r.count({y, x})) return false;
  return true;
}
inline bool antisymmetric(const Rel& r) {
  for (auto [x, y] : r)
    if (x != y && r.count({y, x})) return false;
  return true;
}
inline bool transitive(const Rel& r) {
  for (auto [x, y] : r)
    for (auto [y2, z] : r)
      if (y == y2 && !r.count({x, z})) return false;
  return true;
}

}  // namespace oracle

namespace gen {

// Hand-rolled generators over a fixed-seed engine.
inline std::mt19937_64& engine() {
  static std::mt19937_64 rng(0x5eed5eedULL);
  return rng;
}
inline std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine()() % n; }
inline std::string bits(std::size_t len) {
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(below(2) ? '1' : '0');
  return w;
}
inline oracle::Point point(std::size_t max_pre, std::size_t max_period) {
  return {bits(below(max_pre + 1)), bits(1 + below(max_period))};
}

}  // namespace gen

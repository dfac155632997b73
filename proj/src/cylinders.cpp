#include "cantor/cylinders.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cantor {

namespace {

bool siblings(const Word& a, const Word& b) {
  return a.size() == b.size() && !a.empty() && a[a.size() - 1] == 0 && b[b.size() - 1] == 1 &&
         common_prefix(a, b) == a.size() - 1;
}

// All extensions of w to length d.
std::vector<Word> extensions(const Word& w, std::size_t d) {
  if (d < w.size()) throw std::invalid_argument("cannot extend a word to a shorter length");
  if (d - w.size() > 24) throw std::length_error("cylinder refinement too large");
  std::vector<Word> out;
  for (const Word& tail : words_of_length(d - w.size())) out.push_back(w + tail);
  return out;
}

}  // namespace

ClopenSet::ClopenSet(std::vector<Word> addresses) {
  std::sort(addresses.begin(), addresses.end());
  addresses.erase(std::unique(addresses.begin(), addresses.end()), addresses.end());
  std::vector<Word> stack;
  for (Word& w : addresses) {
    // Sorted order puts every extension of w right after w.
    if (!stack.empty() && stack.back().is_prefix_of(w)) continue;
    stack.push_back(std::move(w));
    while (stack.size() >= 2 && siblings(stack[stack.size() - 2], stack.back())) {
      Word parent = stack.back().prefix(stack.back().size() - 1);
      stack.pop_back();
      stack.back() = std::move(parent);
    }
  }
  addresses_ = std::move(stack);
}

std::size_t ClopenSet::max_depth() const noexcept {
  std::size_t d = 0;
  for (const Word& w : addresses_) d = std::max(d, w.size());
  return d;
}

bool ClopenSet::covers(const Word& w) const noexcept {
  return std::any_of(addresses_.begin(), addresses_.end(), [&](const Word& a) { return a.is_prefix_of(w); });
}

bool ClopenSet::meets(const Word& w) const noexcept {
  return std::any_of(addresses_.begin(), addresses_.end(), [&](const Word& a) { return a.comparable_with(w); });
}

bool ClopenSet::contains(const DescribedPoint& x) const {
  return std::any_of(addresses_.begin(), addresses_.end(),
                     [&](const Word& a) { return x.prefix(a.size()) == a; });
}

ClopenSet ClopenSet::unite(const ClopenSet& o) const {
  std::vector<Word> all = addresses_;
  all.insert(all.end(), o.addresses_.begin(), o.addresses_.end());
  return ClopenSet(std::move(all));
}

ClopenSet ClopenSet::intersect(const ClopenSet& o) const {
  std::vector<Word> out;
  for (const Word& a : addresses_)
    for (const Word& b : o.addresses_) {
      if (a.is_prefix_of(b))
        out.push_back(b);
      else if (b.is_prefix_of(a))
        out.push_back(a);
    }
  return ClopenSet(std::move(out));
}

ClopenSet ClopenSet::complement() const {
  std::vector<Word> out;
  std::vector<Word> todo{Word()};
  while (!todo.empty()) {
    Word p = std::move(todo.back());
    todo.pop_back();
    if (covers(p)) continue;
    if (!meets(p)) {
      out.push_back(std::move(p));
      continue;
    }
    todo.push_back(p.appended(1));
    todo.push_back(p.appended(0));
  }
  return ClopenSet(std::move(out));
}

std::vector<Word> ClopenSet::refine_to(std::size_t d) const {
  std::vector<Word> out;
  for (const Word& a : addresses_) {
    auto ext = extensions(a, d);
    out.insert(out.end(), ext.begin(), ext.end());
  }
  return out;
}

PrefixRewriteMap::PrefixRewriteMap(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_)
    if (r.from.size() != r.to.size()) throw std::invalid_argument("rewrite rule must preserve length");
  auto check_antichain = [](std::vector<Word> ws, const char* what) {
    std::sort(ws.begin(), ws.end());
    for (std::size_t i = 1; i < ws.size(); ++i)
      if (ws[i - 1].is_prefix_of(ws[i]))
        throw std::invalid_argument(std::string("rewrite rule ") + what + " are not prefix-incomparable");
  };
  std::vector<Word> from, to;
  for (const auto& r : rules_) {
    from.push_back(r.from);
    to.push_back(r.to);
  }
  check_antichain(from, "sources");
  check_antichain(to, "targets");
  std::sort(rules_.begin(), rules_.end(), [](const RewriteRule& a, const RewriteRule& b) { return a.from < b.from; });
}

ClopenSet PrefixRewriteMap::domain() const {
  std::vector<Word> ws;
  for (const auto& r : rules_) ws.push_back(r.from);
  return ClopenSet(std::move(ws));
}

ClopenSet PrefixRewriteMap::range() const {
  std::vector<Word> ws;
  for (const auto& r : rules_) ws.push_back(r.to);
  return ClopenSet(std::move(ws));
}

PrefixRewriteMap PrefixRewriteMap::inverse() const {
  std::vector<RewriteRule> inv;
  for (const auto& r : rules_) inv.push_back({r.to, r.from});
  return PrefixRewriteMap(std::move(inv));
}

std::size_t PrefixRewriteMap::max_source_length() const noexcept {
  std::size_t d = 0;
  for (const auto& r : rules_) d = std::max(d, r.from.size());
  return d;
}

std::optional<DescribedPoint> PrefixRewriteMap::apply(const DescribedPoint& x) const {
  for (const auto& r : rules_)
    if (x.prefix(r.from.size()) == r.from) return x.drop(r.from.size()).prepend(r.to);
  return std::nullopt;
}

std::optional<Word> PrefixRewriteMap::apply_cylinder(const Word& w) const {
  for (const auto& r : rules_)
    if (r.from.is_prefix_of(w)) return r.to + w.drop(r.from.size());
  return std::nullopt;
}

ClopenSet PrefixRewriteMap::apply(const ClopenSet& s) const {
  std::vector<Word> out;
  for (const Word& a : s.addresses())
    for (const auto& r : rules_) {
      if (r.from.is_prefix_of(a))
        out.push_back(r.to + a.drop(r.from.size()));
      else if (a.is_prefix_of(r.from))
        out.push_back(r.to);
    }
  return ClopenSet(std::move(out));
}

ClopenSet PrefixRewriteMap::preimage(const ClopenSet& s) const { return inverse().apply(s); }

PrefixRewriteMap PrefixRewriteMap::restricted_to(const ClopenSet& c) const {
  const ClopenSet keep = c.intersect(preimage(c));
  std::vector<RewriteRule> out;
  for (const auto& r : rules_) {
    const ClopenSet part = keep.intersect(ClopenSet({r.from}));
    for (const Word& a : part.addresses()) {
      // Every address of `part` extends r.from; pad targets to equal length.
      out.push_back({a, r.to + a.drop(r.from.size())});
    }
  }
  return PrefixRewriteMap(std::move(out));
}

PrefixRewriteMap build_fS(const SSpec& s, std::size_t n) {
  std::vector<RewriteRule> rules;
  for (const Word& w : words_of_length(n))
    if (s.contains(w.card())) rules.push_back({w.appended(0), w.appended(1)});
  return PrefixRewriteMap(std::move(rules));
}

PrefixRewriteMap build_f1(std::size_t n) {
  const Word s = dense_seq(n);
  return PrefixRewriteMap({{s.appended(0), s.appended(1)}});
}

PrefixRewriteMap build_gflip(std::size_t n) {
  std::vector<RewriteRule> rules;
  for (const Word& w : words_of_length(n)) {
    rules.push_back({w.appended(0), w.appended(1)});
    rules.push_back({w.appended(1), w.appended(0)});
  }
  return PrefixRewriteMap(std::move(rules));
}

Word finite_support(std::uint64_t n) {
  // The words ending in 1 are psi(2), psi(4), psi(6), ...
  return psi(2 * n + 2);
}

PrefixRewriteMap build_gprime(std::uint64_t n) {
  const Word support = finite_support(n);
  std::vector<RewriteRule> rules;
  for (const Word& u : words_of_length(support.size())) {
    bool free = true;
    for (std::size_t p = 0; p < u.size() && free; ++p) free = !(support[p] == 1 && u[p] == 1);
    if (!free) continue;
    Word v = u;
    for (std::size_t p = 0; p < u.size(); ++p)
      if (support[p] == 1) v.set(p, 1);
    rules.push_back({u, v});
  }
  return PrefixRewriteMap(std::move(rules));
}

std::optional<Word> FlipFamily::image(std::size_t n, const Word& w) const {
  if (w.size() <= n) throw std::invalid_argument("cylinder too shallow for a single-cylinder image");
  if (n < restriction_.depth() || !restriction_.address.is_prefix_of(w)) return std::nullopt;
  if (w[n] != 0 || !prefix_ok(w.prefix(n))) return std::nullopt;
  return w.flipped(n);
}

std::optional<Word> FlipFamily::preimage(std::size_t n, const Word& w) const {
  if (w.size() <= n) throw std::invalid_argument("cylinder too shallow for a single-cylinder image");
  if (n < restriction_.depth() || !restriction_.address.is_prefix_of(w)) return std::nullopt;
  if (w[n] != 1 || !prefix_ok(w.prefix(n))) return std::nullopt;
  return w.flipped(n);
}

std::optional<DescribedPoint> FlipFamily::apply(std::size_t n, const DescribedPoint& x, bool inverse) const {
  const Word w = x.prefix(std::max(n + 1, restriction_.depth()));
  const auto img = inverse ? preimage(n, w) : image(n, w);
  if (!img) return std::nullopt;
  return x.flipped(n);
}

ClopenSet FlipFamily::map_set(std::size_t n, const ClopenSet& s, bool inverse) const {
  std::vector<Word> out;
  for (const Word& a : s.addresses()) {
    const std::vector<Word> pieces = a.size() > n ? std::vector<Word>{a} : extensions(a, n + 1);
    for (const Word& w : pieces) {
      const Word probe = w.size() >= restriction_.depth() ? w : w + restriction_.address.drop(w.size());
      if (!w.comparable_with(restriction_.address)) continue;
      if (auto img = inverse ? preimage(n, probe) : image(n, probe)) out.push_back(*img);
    }
  }
  return ClopenSet(std::move(out));
}

ClopenSet FlipFamily::apply(std::size_t n, const ClopenSet& s) const { return map_set(n, s, false); }
ClopenSet FlipFamily::preimage(std::size_t n, const ClopenSet& s) const { return map_set(n, s, true); }
ClopenSet FlipFamily::domain(std::size_t n) const { return preimage(n, ClopenSet::full()); }

PrefixRewriteMap FlipFamily::materialize(std::size_t n) const {
  std::vector<RewriteRule> rules;
  for (const Word& a : domain(n).addresses()) rules.push_back({a, *image(n, a)});
  return PrefixRewriteMap(std::move(rules));
}

std::optional<DescribedPoint> compose_path(const SSpec& s, const std::vector<std::size_t>& t,
                                           const std::vector<int>& eps, const DescribedPoint& x) {
  if (t.empty()) throw std::invalid_argument("compose_path needs a nonempty index sequence");
  if (eps.size() != t.size()) throw std::invalid_argument("one sign per index is required");
  std::optional<DescribedPoint> cur = x;
  for (std::size_t i = t.size(); i-- > 0 && cur;) {
    const PrefixRewriteMap f = build_fS(s, t[i]);
    cur = eps[i] > 0 ? f.apply(*cur) : f.inverse().apply(*cur);
  }
  return cur;
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::AS: return "AS";
    case RelationKind::A1: return "A1";
    case RelationKind::C1: return "C1";
    case RelationKind::E0: return "E0";
    case RelationKind::L0: return "L0";
    case RelationKind::Delta: return "Delta";
    case RelationKind::Pf: return "Pf";
  }
  return "?";
}

RelationKind parse_relation(const std::string& name) {
  for (auto k : {RelationKind::AS, RelationKind::A1, RelationKind::C1, RelationKind::E0, RelationKind::L0,
                 RelationKind::Delta, RelationKind::Pf}) {
    std::string lower = to_string(k);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == to_string(k) || name == lower) return k;
  }
  throw std::invalid_argument("unknown relation '" + name + "'");
}

bool decide_relation(RelationKind kind, const DescribedPoint& x, const DescribedPoint& y, const SSpec* s) {
  switch (kind) {
    case RelationKind::Delta: return x == y;
    case RelationKind::E0: return eventually_equal(x, y);
    case RelationKind::L0: return lex_less(x, y);
    case RelationKind::Pf: return x.eventually_zero();
    default: break;
  }
  // A pair (u0z, u1z) differs exactly at k = |u|, so the only candidate split
  // is the first difference.
  const auto k = first_difference(x, y);
  if (!k || x.bit(*k) != 0 || y.bit(*k) != 1) return false;
  if (x.drop(*k + 1) != y.drop(*k + 1)) return false;
  switch (kind) {
    case RelationKind::AS:
      if (!s) throw std::invalid_argument("A^S needs a set S");
      return s->contains(x.card_prefix(*k));
    case RelationKind::A1: return x.prefix(*k) == dense_seq(*k);
    default: return true;
  }
}

bool is_reduced(const std::vector<std::size_t>& v, const std::vector<int>& eps) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1] && eps[i] == -eps[i + 1]) return false;
  return true;
}

FixedPointReport fixed_point_check(const std::vector<std::size_t>& v, const std::vector<int>& eps, std::size_t d) {
  if (v.empty() || v.size() != eps.size()) throw std::invalid_argument("fixed-point check needs matching nonempty v and signs");
  if (!is_reduced(v, eps)) throw std::invalid_argument("index sequence is not reduced");
  const std::size_t top = *std::max_element(v.begin(), v.end());
  if (d <= top || d > 24) throw std::invalid_argument("depth must exceed every index and be at most 24");

  // Coordinate i of a word is bit i of the mask.
  std::vector<std::uint32_t> dense(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const Word s = dense_seq(n);
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) dense[n] |= std::uint32_t{1} << i;
  }
  FixedPointReport r;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << d); ++x) {
    std::uint32_t y = x;
    bool defined = true;
    for (std::size_t i = 0; i < v.size() && defined; ++i) {
      const auto n = v[i];
      const std::uint32_t low = y & ((std::uint32_t{1} << n) - 1);
      const std::uint32_t want = eps[i] > 0 ? 0 : 1;
      defined = low == dense[n] && ((y >> n) & 1U) == want;
      y ^= std::uint32_t{1} << n;
    }
    if (!defined) continue;
    ++r.domain_cylinders;
    if (y == x) {
      r.pass = false;
      r.counterexample = Word::from_binary(x, d).str();
      return r;
    }
  }
  return r;
}

CommuteReport commuting_check(const PrefixRewriteMap& fm, const PrefixRewriteMap& fn, std::size_t d) {
  if (d < std::max(fm.max_source_length(), fn.max_source_length()))
    throw std::invalid_argument("depth must reach every rule source");
  CommuteReport r;
  for (const Word& w : words_of_length(d)) {
    ++r.compared;
    const auto a = fm.apply_cylinder(w);
    const auto b = fn.apply_cylinder(w);
    if (a && b && *a == *b) r.graphs_disjoint = false;
    const auto mn = b ? fm.apply_cylinder(*b) : std::nullopt;
    const auto nm = a ? fn.apply_cylinder(*a) : std::nullopt;
    if (mn.has_value() != nm.has_value()) r.domains_match = false;
    if (mn && nm && *mn != *nm) r.values_agree = false;
    if (!r.pass() && !r.counterexample) r.counterexample = w.str();
  }
  return r;
}

bool symmetric_c1_matches_flips(std::size_t d) {
  // Word pairs (u, v) with N_u x N_v meeting s(C_1): from (s0z, s1z) with
  // |s| < d the pair differs at |s| only, with |s| >= d it is diagonal.
  std::set<std::pair<Word, Word>> from_c1;
  for (std::size_t k = 0; k <= d; ++k)
    for (const Word& s : words_of_length(std::min(k, d))) {
      if (k == d) {
        from_c1.emplace(s, s);
        continue;
      }
      for (const Word& tail : words_of_length(d - k - 1)) {
        const Word u = s.appended(0) + tail, v = s.appended(1) + tail;
        from_c1.emplace(u, v);
        from_c1.emplace(v, u);
      }
    }
  std::set<std::pair<Word, Word>> from_flips;
  for (std::size_t n = 0; n <= d; ++n) {
    const auto g = build_gflip(n);
    for (const Word& u : words_of_length(d)) {
      // Probe with a deep enough representative; g_n with n >= d fixes the prefix.
      const Word probe = n < d ? u : u + Word::zeros(n + 1 - d);
      const auto img = g.apply_cylinder(probe);
      if (img) from_flips.emplace(u, img->prefix(d));
    }
  }
  return from_c1 == from_flips;
}

ClosureReport closure_a1_check(std::size_t d) {
  if (d > 12) throw std::invalid_argument("closure check limited to depth 12");
  // Word pairs met by A_1, generated from (s_n 0 z, s_n 1 z): enough n to
  // reach every dense witness of a depth-d word.
  std::set<std::pair<Word, Word>> met;
  const std::uint64_t n_max = psi_inv(Word::ones(d)) + 1;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const Word s = dense_seq(n);
    if (n >= d) {
      met.emplace(s.prefix(d), s.prefix(d));
      continue;
    }
    for (const Word& tail : words_of_length(d - n - 1)) met.emplace(s.appended(0) + tail, s.appended(1) + tail);
  }
  // Expected: strict A_1 pairs decided on described points, plus the diagonal.
  std::set<std::pair<Word, Word>> expected;
  ClosureReport r;
  for (const Word& u : words_of_length(d)) {
    expected.emplace(u, u);
    ++r.diagonal;
    for (const Word& v : words_of_length(d))
      if (u != v && decide_relation(RelationKind::A1, DescribedPoint::finite(u), DescribedPoint::finite(v)))
        expected.emplace(u, v);
  }
  r.pairs = met.size();
  r.pass = met == expected;
  return r;
}

}  // namespace cantor

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cantor/point.hpp"
#include "cantor/ruler.hpp"
#include "cantor/words.hpp"

namespace cantor {

struct Cylinder {
  Word address;

  std::size_t depth() const noexcept { return address.size(); }
  bool contains(const DescribedPoint& x) const { return x.prefix(address.size()) == address; }
  bool subset_of(const Cylinder& c) const noexcept { return c.address.is_prefix_of(address); }
  bool intersects(const Cylinder& c) const noexcept { return address.comparable_with(c.address); }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

// Finite union of cylinders, stored as a sorted antichain with sibling pairs
// merged, so equal sets have equal representations.
class ClopenSet {
 public:
  ClopenSet() = default;
  explicit ClopenSet(std::vector<Word> addresses);
  static ClopenSet full() { return ClopenSet({Word()}); }
  static ClopenSet of(const Cylinder& c) { return ClopenSet({c.address}); }

  const std::vector<Word>& addresses() const noexcept { return addresses_; }
  bool empty() const noexcept { return addresses_.empty(); }
  bool is_full() const noexcept { return addresses_.size() == 1 && addresses_[0].empty(); }
  std::size_t max_depth() const noexcept;

  bool covers(const Word& w) const noexcept;      // N_w is a subset
  bool meets(const Word& w) const noexcept;       // N_w intersects
  bool contains(const DescribedPoint& x) const;

  ClopenSet unite(const ClopenSet& o) const;
  ClopenSet intersect(const ClopenSet& o) const;
  ClopenSet complement() const;
  ClopenSet minus(const ClopenSet& o) const { return intersect(o.complement()); }
  // Depth-d cylinders contained in the set; requires d >= max_depth().
  std::vector<Word> refine_to(std::size_t d) const;

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  std::vector<Word> addresses_;
};

struct RewriteRule {
  Word from;
  Word to;
};

// Partial homeomorphism given by finitely many rules from -> to, with the
// sources pairwise prefix-incomparable and likewise the targets; a point
// from.z is sent to to.z.
class PrefixRewriteMap {
 public:
  explicit PrefixRewriteMap(std::vector<RewriteRule> rules);

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  ClopenSet domain() const;
  ClopenSet range() const;
  PrefixRewriteMap inverse() const;
  std::size_t max_source_length() const noexcept;

  std::optional<DescribedPoint> apply(const DescribedPoint& x) const;
  // Image of N_w when N_w lies inside a single rule's source; none otherwise.
  std::optional<Word> apply_cylinder(const Word& w) const;
  ClopenSet apply(const ClopenSet& s) const;
  ClopenSet preimage(const ClopenSet& s) const;
  // Restriction to C intersected with the preimage of C.
  PrefixRewriteMap restricted_to(const ClopenSet& c) const;

 private:
  std::vector<RewriteRule> rules_;
};

// f^S_n: s0 -> s1 for every s of length n with card(s) in S.
PrefixRewriteMap build_fS(const SSpec& s, std::size_t n);
// f^1_n: the single rule s_n 0 -> s_n 1.
PrefixRewriteMap build_f1(std::size_t n);
// g_n: flips coordinate n.
PrefixRewriteMap build_gflip(std::size_t n);
// n-th finitely supported nonzero sequence, as its support word (ends in 1).
Word finite_support(std::uint64_t n);
// g'_n: raises the coordinates in the support of finite_support(n) to 1.
PrefixRewriteMap build_gprime(std::uint64_t n);

// Family (f_n) in which f_n flips coordinate n from 0 to 1 on the points whose
// prefix of length n passes a test, optionally restricted to a cylinder B.
class FlipFamily {
 public:
  virtual ~FlipFamily() = default;
  virtual bool prefix_ok(const Word& prefix) const = 0;
  virtual std::string name() const = 0;

  const Cylinder& restriction() const noexcept { return restriction_; }
  void restrict_to(Cylinder b) { restriction_ = std::move(b); }

  // Image of N_w under f_n (or its inverse); needs |w| > n.
  std::optional<Word> image(std::size_t n, const Word& w) const;
  std::optional<Word> preimage(std::size_t n, const Word& w) const;
  std::optional<DescribedPoint> apply(std::size_t n, const DescribedPoint& x, bool inverse = false) const;
  ClopenSet apply(std::size_t n, const ClopenSet& s) const;
  ClopenSet preimage(std::size_t n, const ClopenSet& s) const;
  ClopenSet domain(std::size_t n) const;
  PrefixRewriteMap materialize(std::size_t n) const;

 private:
  ClopenSet map_set(std::size_t n, const ClopenSet& s, bool inverse) const;
  Cylinder restriction_{};
};

class ASFamily final : public FlipFamily {
 public:
  explicit ASFamily(SSpec s) : member_(std::make_shared<SMembership>(std::move(s))) {}
  bool prefix_ok(const Word& prefix) const override { return (*member_)(prefix.card()); }
  std::string name() const override { return "AS(" + member_->spec().describe() + ")"; }
  const SSpec& spec() const noexcept { return member_->spec(); }

 private:
  std::shared_ptr<SMembership> member_;
};

class A1Family final : public FlipFamily {
 public:
  bool prefix_ok(const Word& prefix) const override { return prefix == dense_seq(prefix.size()); }
  std::string name() const override { return "A1"; }
};

// f^S_t = f_{t(0)} o ... o f_{t(last)} with signs; rightmost applied first.
std::optional<DescribedPoint> compose_path(const SSpec& s, const std::vector<std::size_t>& t,
                                           const std::vector<int>& eps, const DescribedPoint& x);

enum class RelationKind { AS, A1, C1, E0, L0, Delta, Pf };
std::string to_string(RelationKind k);
RelationKind parse_relation(const std::string& name);

// Exact decision on described points. For Pf, membership of x is decided and
// y is ignored. `s` is only consulted for AS.
bool decide_relation(RelationKind kind, const DescribedPoint& x, const DescribedPoint& y,
                     const SSpec* s = nullptr);

struct FixedPointReport {
  bool reduced = true;
  std::size_t domain_cylinders = 0;
  bool pass = true;
  std::optional<std::string> counterexample;
};

// f^{eps}_v for the f^1 family, v(0) applied first, checked for fixed points on
// every depth-d cylinder of its domain. Requires d > max(v).
FixedPointReport fixed_point_check(const std::vector<std::size_t>& v, const std::vector<int>& eps, std::size_t d);
bool is_reduced(const std::vector<std::size_t>& v, const std::vector<int>& eps);

struct CommuteReport {
  std::size_t compared = 0;
  bool domains_match = true;
  bool values_agree = true;
  bool graphs_disjoint = true;
  std::optional<std::string> counterexample;
  bool pass() const noexcept { return domains_match && values_agree && graphs_disjoint; }
};

// f_m o f_n against f_n o f_m on all depth-d cylinders.
CommuteReport commuting_check(const PrefixRewriteMap& fm, const PrefixRewriteMap& fn, std::size_t d);

// s(C_1) and the union of the graphs of the g_n induce the same word pairs at depth d.
bool symmetric_c1_matches_flips(std::size_t d);

// Pairs of depth-d cylinders meeting cl(A_1) are those meeting A_1 together
// with the diagonal pairs.
struct ClosureReport {
  std::size_t pairs = 0;
  std::size_t diagonal = 0;
  bool pass = false;
};
ClosureReport closure_a1_check(std::size_t d);

}  // namespace cantor

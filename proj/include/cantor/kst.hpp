#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "cantor/words.hpp"

namespace cantor {

// Nested sets S_0 > S_1 > ... with injections f_n : S_n -> S_n \ S_{n+1}.
class NestedFamily {
 public:
  virtual ~NestedFamily() = default;
  virtual bool in_s(std::uint64_t n, std::uint64_t k) const = 0;
  virtual std::uint64_t f(std::uint64_t n, std::uint64_t k) const = 0;  // requires in_s(n, k)
  virtual std::string name() const = 0;
  // Least element of S_n below the horizon.
  std::optional<std::uint64_t> min_below(std::uint64_t n, std::uint64_t horizon) const;
};

// S_n = positive multiples of 2^n, f_n(2^n m) = 2^n (2m - 1).
class Pow2Family final : public NestedFamily {
 public:
  bool in_s(std::uint64_t n, std::uint64_t k) const override;
  std::uint64_t f(std::uint64_t n, std::uint64_t k) const override;
  std::string name() const override { return "pow2"; }
};

// Words over {0, 1, ?}; '?' marks a position the horizon cannot determine.
class TritWord {
 public:
  TritWord() = default;
  explicit TritWord(std::string letters);
  static TritWord from(const Word& w) { return TritWord(w.str()); }

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  bool known(std::size_t i) const { return letters_[i] != '?'; }
  const std::string& str() const noexcept { return letters_; }

  friend bool operator==(const TritWord&, const TritWord&) = default;

 private:
  std::string letters_;
};

// [g_n(a)](k) = a(f_n(k)) for k in S_n and a(k) otherwise, truncated to |a|.
TritWord g_eval(const NestedFamily& fam, std::uint64_t n, const TritWord& a);

struct FamilyReport {
  bool nested = true;
  bool layers_grow = true;      // S_n \ S_{n+1} keeps gaining elements up to the horizon
  bool intersection_empty = true;
  bool f_injective = true;
  bool f_in_layer = true;
  bool pass() const noexcept { return nested && layers_grow && intersection_empty && f_injective && f_in_layer; }
};
FamilyReport check_family(const NestedFamily& fam, std::uint64_t n_max, std::uint64_t horizon);

struct CompositionReport {
  std::size_t samples = 0;
  std::size_t determined_positions = 0;
  std::size_t disagreements = 0;
  std::optional<std::string> counterexample;
  bool pass() const noexcept { return disagreements == 0; }
};

// g_m o g_n = g_m for m < n, compared where both sides are determined.
CompositionReport composition_law_check(const NestedFamily& fam, std::uint64_t m, std::uint64_t n,
                                        std::size_t horizon, std::size_t samples, std::mt19937_64& rng);
// g_m o g_n o g_p = g_m for m < n and m < p.
CompositionReport triple_law_check(const NestedFamily& fam, std::uint64_t m, std::uint64_t n, std::uint64_t p,
                                   std::size_t horizon, std::size_t samples, std::mt19937_64& rng);

struct StabilityReport {
  std::size_t samples = 0;
  bool pass = true;
  std::optional<std::string> counterexample;
};

// g_n keeps every extension of s inside N_s; requires |s| < min S_n.
StabilityReport cylinder_stability_check(const NestedFamily& fam, std::uint64_t n, const Word& s,
                                         std::size_t horizon, std::size_t samples, std::mt19937_64& rng);

}  // namespace cantor

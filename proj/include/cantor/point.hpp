#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cantor/words.hpp"

namespace cantor {

// Eventually periodic point pre . period^omega of 2^omega, kept in canonical
// form (primitive period, shortest preperiod) so that == is equality of points.
class DescribedPoint {
 public:
  DescribedPoint() : period_(Word("0")) {}
  DescribedPoint(Word pre, Word period);

  // "pre|period"; a bare word w is read as w|0.
  static DescribedPoint parse(std::string_view text);
  static DescribedPoint finite(const Word& w) { return DescribedPoint(w, Word("0")); }

  const Word& pre() const noexcept { return pre_; }
  const Word& period() const noexcept { return period_; }

  int bit(std::size_t i) const noexcept;
  Word prefix(std::size_t n) const;
  std::size_t card_prefix(std::size_t n) const;

  DescribedPoint drop(std::size_t k) const;
  DescribedPoint prepend(const Word& w) const { return DescribedPoint(w + pre_, period_); }
  DescribedPoint with_bit(std::size_t i, int b) const;
  DescribedPoint flipped(std::size_t i) const { return with_bit(i, 1 - bit(i)); }

  bool eventually_zero() const noexcept { return period_ == Word("0"); }

  std::string to_string() const { return pre_.str() + "|" + period_.str(); }

  friend bool operator==(const DescribedPoint&, const DescribedPoint&) = default;

 private:
  Word pre_;
  Word period_;
};

// Least coordinate where the points differ, none if they are equal.
std::optional<std::size_t> first_difference(const DescribedPoint& a, const DescribedPoint& b);
bool lex_less(const DescribedPoint& a, const DescribedPoint& b);
bool eventually_equal(const DescribedPoint& a, const DescribedPoint& b);

}  // namespace cantor

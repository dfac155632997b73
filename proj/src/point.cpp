#include "cantor/point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cantor {

namespace {

Word primitive_root(const Word& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
    if (ok) return v.prefix(d);
  }
  return v;
}

Word rotate_right(const Word& v) {
  Word r;
  r.push_back(v[v.size() - 1]);
  return r + v.prefix(v.size() - 1);
}

}  // namespace

DescribedPoint::DescribedPoint(Word pre, Word period) : pre_(std::move(pre)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period of a described point must be nonempty");
  period_ = primitive_root(period_);
  while (!pre_.empty() && pre_[pre_.size() - 1] == period_[period_.size() - 1]) {
    pre_.pop_back();
    period_ = rotate_right(period_);
  }
}

DescribedPoint DescribedPoint::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return finite(Word(text));
  return DescribedPoint(Word(text.substr(0, bar)), Word(text.substr(bar + 1)));
}

int DescribedPoint::bit(std::size_t i) const noexcept {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

Word DescribedPoint::prefix(std::size_t n) const {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(bit(i));
  return w;
}

std::size_t DescribedPoint::card_prefix(std::size_t n) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(bit(i));
  return c;
}

DescribedPoint DescribedPoint::drop(std::size_t k) const {
  if (k <= pre_.size()) return DescribedPoint(pre_.drop(k), period_);
  const std::size_t r = (k - pre_.size()) % period_.size();
  return DescribedPoint(Word(), period_.drop(r) + period_.prefix(r));
}

DescribedPoint DescribedPoint::with_bit(std::size_t i, int b) const {
  Word pre = prefix(std::max(i + 1, pre_.size()));
  pre.set(i, b);
  const std::size_t shift = (pre.size() - pre_.size()) % period_.size();
  return DescribedPoint(pre, period_.drop(shift) + period_.prefix(shift));
}

std::optional<std::size_t> first_difference(const DescribedPoint& a, const DescribedPoint& b) {
  const std::size_t horizon = std::max(a.pre().size(), b.pre().size()) +
                              std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < horizon; ++i)
    if (a.bit(i) != b.bit(i)) return i;
  return std::nullopt;
}

bool lex_less(const DescribedPoint& a, const DescribedPoint& b) {
  const auto k = first_difference(a, b);
  return k && a.bit(*k) == 0;
}

bool eventually_equal(const DescribedPoint& a, const DescribedPoint& b) {
  const std::size_t h = std::max(a.pre().size(), b.pre().size());
  return a.drop(h) == b.drop(h);
}

}  // namespace cantor

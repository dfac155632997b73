#include "cantor/words.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cantor {

Word::Word(std::string_view bits) : bits_(bits) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("word may only contain 0 and 1: '" + std::string(bits) + "'");
}

Word Word::from_binary(std::uint64_t value, std::size_t len) {
  std::string s(len, '0');
  for (std::size_t i = 0; i < len; ++i)
    if ((value >> (len - 1 - i)) & 1U) s[i] = '1';
  return Word(std::move(s), Raw{});
}

int Word::at(std::size_t i) const {
  if (i >= bits_.size()) throw std::out_of_range("word index out of range");
  return (*this)[i];
}

void Word::set(std::size_t i, int bit) {
  if (i >= bits_.size()) throw std::out_of_range("word index out of range");
  bits_[i] = bit ? '1' : '0';
}

Word Word::prefix(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("prefix longer than word");
  return Word(bits_.substr(0, n), Raw{});
}

Word Word::drop(std::size_t k) const {
  if (k > bits_.size()) throw std::out_of_range("drop past end of word");
  return Word(bits_.substr(k), Raw{});
}

Word Word::flipped(std::size_t i) const {
  Word w = *this;
  w.set(i, 1 - at(i));
  return w;
}

Word Word::appended(int bit) const {
  Word w = *this;
  w.push_back(bit);
  return w;
}

bool Word::is_prefix_of(const Word& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

bool Word::comparable_with(const Word& other) const noexcept {
  return is_prefix_of(other) || other.is_prefix_of(*this);
}

std::size_t Word::card() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

Word psi(std::uint64_t n) {
  if (n == UINT64_MAX) throw std::out_of_range("psi index too large");
  // Words of length L occupy indices [2^L - 1, 2^{L+1} - 2].
  const auto len = static_cast<std::size_t>(std::bit_width(n + 1) - 1);
  const std::uint64_t offset = n - ((std::uint64_t{1} << len) - 1);
  return Word::from_binary(offset, len);
}

std::uint64_t psi_inv(const Word& w) {
  if (w.size() >= 63) throw std::out_of_range("word too long for psi index");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) v = (v << 1) | static_cast<std::uint64_t>(w[i]);
  return ((std::uint64_t{1} << w.size()) - 1) + v;
}

Word dense_seq(std::uint64_t n) {
  Word w = psi(n);
  return w + Word::zeros(static_cast<std::size_t>(n) - w.size());
}

std::uint64_t density_witness(const Word& w) { return psi_inv(w); }

std::size_t card(const Word& w) noexcept { return w.card(); }

namespace {

std::vector<std::size_t> failure_function(const std::string& p) {
  std::vector<std::size_t> f(p.size(), 0);
  for (std::size_t i = 1, k = 0; i < p.size(); ++i) {
    while (k > 0 && p[i] != p[k]) k = f[k - 1];
    if (p[i] == p[k]) ++k;
    f[i] = k;
  }
  return f;
}

// Calls on_match(offset) for each occurrence; stops when it returns false.
template <class F>
void kmp_scan(const std::string& p, const std::string& t, F on_match) {
  if (p.empty()) {
    for (std::size_t l = 0; l <= t.size(); ++l)
      if (!on_match(l)) return;
    return;
  }
  if (p.size() > t.size()) return;
  const auto f = failure_function(p);
  for (std::size_t i = 0, k = 0; i < t.size(); ++i) {
    while (k > 0 && t[i] != p[k]) k = f[k - 1];
    if (t[i] == p[k]) ++k;
    if (k == p.size()) {
      if (!on_match(i + 1 - p.size())) return;
      k = f[k - 1];
    }
  }
}

}  // namespace

std::optional<std::size_t> factor_occurs(const Word& s, const Word& t) {
  std::optional<std::size_t> hit;
  kmp_scan(s.str(), t.str(), [&](std::size_t l) {
    hit = l;
    return false;
  });
  return hit;
}

std::size_t count_occurrences(const Word& s, const Word& t) {
  std::size_t n = 0;
  kmp_scan(s.str(), t.str(), [&](std::size_t) {
    ++n;
    return true;
  });
  return n;
}

Word reversed(const Word& w) {
  std::string s = w.str();
  std::reverse(s.begin(), s.end());
  return Word(s);
}

bool is_symmetric(const Word& w) {
  const auto& s = w.str();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::size_t common_prefix(const Word& a, const Word& b) noexcept {
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::vector<Word> words_of_length(std::size_t n) {
  if (n >= 32) throw std::out_of_range("too many words to enumerate");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) out.push_back(Word::from_binary(v, n));
  return out;
}

}  // namespace cantor

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

// Finite binary word. Stored as a string of '0'/'1' so that the default
// ordering is the lexicographic one with a proper prefix sorting first.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view bits);

  static Word zeros(std::size_t n) { return Word(n, '0'); }
  static Word ones(std::size_t n) { return Word(n, '1'); }
  // Low `len` bits of `value`, most significant first.
  static Word from_binary(std::uint64_t value, std::size_t len);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const noexcept { return bits_[i] == '1' ? 1 : 0; }
  int at(std::size_t i) const;

  const std::string& str() const noexcept { return bits_; }

  void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
  void pop_back() { bits_.pop_back(); }
  void set(std::size_t i, int bit);

  Word prefix(std::size_t n) const;
  Word drop(std::size_t k) const;
  Word flipped(std::size_t i) const;
  Word appended(int bit) const;
  Word operator+(const Word& rhs) const { return Word(bits_ + rhs.bits_, Raw{}); }

  bool is_prefix_of(const Word& other) const noexcept;
  bool comparable_with(const Word& other) const noexcept;
  std::size_t card() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  struct Raw {};
  Word(std::string bits, Raw) : bits_(std::move(bits)) {}
  Word(std::size_t n, char c) : bits_(n, c) {}
  std::string bits_;
};

// Length-then-lexicographic enumeration of 2^{<omega}.
Word psi(std::uint64_t n);
std::uint64_t psi_inv(const Word& w);

// psi(n) right-padded with zeros to length n.
Word dense_seq(std::uint64_t n);
// Canonical n with w a prefix of dense_seq(n), namely psi_inv(w).
std::uint64_t density_witness(const Word& w);

std::size_t card(const Word& w) noexcept;

// Least offset l such that `s` occurs in `t` starting at l.
std::optional<std::size_t> factor_occurs(const Word& s, const Word& t);
std::size_t count_occurrences(const Word& s, const Word& t);

Word reversed(const Word& w);
bool is_symmetric(const Word& w);

// Longest common prefix length.
std::size_t common_prefix(const Word& a, const Word& b) noexcept;

std::vector<Word> words_of_length(std::size_t n);

}  // namespace cantor

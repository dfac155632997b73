#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cantor {

// Binary relation on {0, ..., n-1} stored as an n x n bit matrix.
class FiniteRelation {
 public:
  explicit FiniteRelation(std::size_t n = 0) : n_(n), bits_(n * n, false) {}
  FiniteRelation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  // Bit x*n+y of mask encodes (x, y); requires n*n <= 64.
  static FiniteRelation from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const noexcept { return n_; }
  bool has(std::size_t x, std::size_t y) const { return bits_[x * n_ + y]; }
  void add(std::size_t x, std::size_t y);
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

enum class TransformKind { R, RPrime, S, SPrime };
std::string to_string(TransformKind k);
TransformKind parse_transform(const std::string& name);  // r, rp, s, sp

// Element (x, i) of the doubled set is numbered 2x + i.
constexpr std::size_t doubled(std::size_t x, std::size_t i) noexcept { return 2 * x + i; }
FiniteRelation transform(TransformKind kind, const FiniteRelation& a);

// Bits 0..4: reflexive, irreflexive, symmetric, antisymmetric, transitive.
using Profile = std::bitset<5>;
Profile check_properties(const FiniteRelation& a);
std::string describe_profile(const Profile& p);

enum class SigmaVerdict { EmptyClass, DiagonalOnly, EquivalenceReducible, Admissible };
std::string to_string(SigmaVerdict v);
SigmaVerdict classify_sigma(const Profile& sigma);

// Every relation on at most max_points points with all properties in sigma is
// empty (resp. inside the diagonal).
bool confirm_empty(const Profile& sigma, std::size_t max_points = 3);
bool confirm_diagonal(const Profile& sigma, std::size_t max_points = 3);

}  // namespace cantor

#include "cantor/structures.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

FiniteRelation::FiniteRelation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : FiniteRelation(n) {
  for (const auto& [x, y] : pairs) add(x, y);
}

FiniteRelation FiniteRelation::from_mask(std::size_t n, std::uint64_t mask) {
  if (n * n > 64) throw std::invalid_argument("mask encoding needs n*n <= 64");
  FiniteRelation r(n);
  for (std::size_t i = 0; i < n * n; ++i)
    if (mask >> i & 1U) r.bits_[i] = true;
  return r;
}

void FiniteRelation::add(std::size_t x, std::size_t y) {
  if (x >= n_ || y >= n_)
    throw std::out_of_range("pair (" + std::to_string(x) + "," + std::to_string(y) + ") outside a ground set of " +
                            std::to_string(n_));
  bits_[x * n_ + y] = true;
}

std::size_t FiniteRelation::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (has(x, y)) out.emplace_back(x, y);
  return out;
}

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::R: return "r";
    case TransformKind::RPrime: return "rp";
    case TransformKind::S: return "s";
    case TransformKind::SPrime: return "sp";
  }
  return "?";
}

TransformKind parse_transform(const std::string& name) {
  if (name == "r") return TransformKind::R;
  if (name == "rp") return TransformKind::RPrime;
  if (name == "s") return TransformKind::S;
  if (name == "sp") return TransformKind::SPrime;
  throw std::invalid_argument("unknown transform '" + name + "' (expected r, rp, s or sp)");
}

FiniteRelation transform(TransformKind kind, const FiniteRelation& a) {
  const std::size_t n = a.size();
  FiniteRelation out(2 * n);
  const bool identity = kind == TransformKind::R || kind == TransformKind::S;
  const bool backward = kind == TransformKind::S || kind == TransformKind::SPrime;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t j = 0; j < 2; ++j) {
          const bool same = x == y && i == j;
          const bool forward_pair = a.has(x, y) && i == 0 && j == 1;
          const bool backward_pair = backward && a.has(y, x) && i == 1 && j == 0;
          if ((identity && same) || forward_pair || backward_pair) out.add(doubled(x, i), doubled(y, j));
        }
  return out;
}

Profile check_properties(const FiniteRelation& a) {
  const std::size_t n = a.size();
  bool refl = true, irrefl = true, sym = true, antisym = true, trans = true;
  for (std::size_t x = 0; x < n; ++x) {
    refl = refl && a.has(x, x);
    irrefl = irrefl && !a.has(x, x);
    for (std::size_t y = 0; y < n; ++y) {
      if (!a.has(x, y)) continue;
      sym = sym && a.has(y, x);
      antisym = antisym && (x == y || !a.has(y, x));
      for (std::size_t z = 0; z < n && trans; ++z)
        if (a.has(y, z) && !a.has(x, z)) trans = false;
    }
  }
  Profile p;
  p[0] = refl;
  p[1] = irrefl;
  p[2] = sym;
  p[3] = antisym;
  p[4] = trans;
  return p;
}

std::string describe_profile(const Profile& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < 5; ++i)
    if (p[i]) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string to_string(SigmaVerdict v) {
  switch (v) {
    case SigmaVerdict::EmptyClass: return "empty-class";
    case SigmaVerdict::DiagonalOnly: return "diagonal-only";
    case SigmaVerdict::EquivalenceReducible: return "equivalence-reducible";
    case SigmaVerdict::Admissible: return "admissible";
  }
  return "?";
}

SigmaVerdict classify_sigma(const Profile& sigma) {
  const auto is = [&](std::initializer_list<std::size_t> members) {
    Profile want;
    for (auto m : members) want[m] = true;
    return sigma == want;
  };
  if ((sigma[0] && sigma[1]) || is({1, 2, 4})) return SigmaVerdict::EmptyClass;
  if (sigma[2] && sigma[3]) return SigmaVerdict::DiagonalOnly;
  if (is({0, 2, 4}) || is({2, 4})) return SigmaVerdict::EquivalenceReducible;
  return SigmaVerdict::Admissible;
}

namespace {

template <typename Pred>
bool all_satisfying(const Profile& sigma, std::size_t max_points, Pred pred) {
  for (std::size_t n = 0; n <= max_points; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * n);
    for (std::uint64_t m = 0; m < masks; ++m) {
      const FiniteRelation r = FiniteRelation::from_mask(n, m);
      if ((check_properties(r) & sigma) == sigma && !pred(r)) return false;
    }
  }
  return true;
}

}  // namespace

bool confirm_empty(const Profile& sigma, std::size_t max_points) {
  return all_satisfying(sigma, max_points, [](const FiniteRelation& r) { return r.empty(); });
}

bool confirm_diagonal(const Profile& sigma, std::size_t max_points) {
  return all_satisfying(sigma, max_points, [](const FiniteRelation& r) {
    for (const auto& [x, y] : r.pairs())
      if (x != y) return false;
    return true;
  });
}

}  // namespace cantor

#include "cantor/ruler.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cantor {

std::uint64_t ruler_val(std::uint64_t i) noexcept {
  return static_cast<std::uint64_t>(std::countr_zero(i + 1));
}

int gamma_alpha(const AlphaSpec& alpha, std::uint64_t n) {
  if (n % 2 == 1) return alpha.bit(static_cast<std::size_t>(n / 2));
  return static_cast<int>((n / 2) % 2);
}

int beta_alpha(const AlphaSpec& alpha, std::uint64_t i) { return gamma_alpha(alpha, ruler_val(i)); }

Word beta_alpha_prefix(const AlphaSpec& alpha, std::size_t len) {
  // gamma is only ever read at small valuations; tabulate them once.
  std::vector<int> g(65);
  for (std::uint64_t v = 0; v < g.size(); ++v) g[v] = gamma_alpha(alpha, v);
  std::string s(len, '0');
  for (std::size_t i = 0; i < len; ++i)
    if (g[ruler_val(i)]) s[i] = '1';
  return Word(s);
}

std::uint64_t beta_value(const BetaSpec& beta, std::uint64_t i) {
  return std::visit(
      [i](const auto& b) -> std::uint64_t {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PeriodicBeta>) {
          if (i < b.pre.size()) return b.pre[i];
          return b.period[(i - b.pre.size()) % b.period.size()];
        } else if constexpr (std::is_same_v<T, LouveauBeta>) {
          return static_cast<std::uint64_t>(beta_alpha(b.alpha, i));
        } else {
          return i + b.n;
        }
      },
      beta);
}

SSpec SSpec::from_beta(BetaSpec beta) {
  if (const auto* p = std::get_if<PeriodicBeta>(&beta); p && p->period.empty())
    throw std::invalid_argument("periodic beta needs a nonempty period");
  return SSpec(std::move(beta));
}

SSpec SSpec::modular(std::uint64_t m, std::vector<std::uint64_t> residues) {
  if (m == 0) throw std::invalid_argument("modular set needs m >= 1");
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  for (auto r : residues)
    if (r == 0 || r >= m) throw std::invalid_argument("residues must lie in [1, m-1]");
  return SSpec(ModularSet{m, std::move(residues)});
}

bool SSpec::contains(std::uint64_t n) const {
  if (const auto* mod = std::get_if<ModularSet>(&repr_)) {
    const auto r = n % mod->m;
    return r == 0 || std::binary_search(mod->residues.begin(), mod->residues.end(), r);
  }
  const auto& beta = std::get<BetaSpec>(repr_);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; sum < n; ++i) sum += 1 + beta_value(beta, i);
  return sum == n;
}

std::vector<bool> SSpec::materialize(std::uint64_t upto) const {
  std::vector<bool> bits(upto + 1, false);
  if (std::holds_alternative<ModularSet>(repr_)) {
    for (std::uint64_t n = 0; n <= upto; ++n) bits[n] = contains(n);
    return bits;
  }
  const auto& beta = std::get<BetaSpec>(repr_);
  for (std::uint64_t i = 0, sum = 0; sum <= upto; ++i) {
    bits[sum] = true;
    sum += 1 + beta_value(beta, i);
  }
  return bits;
}

std::vector<std::uint64_t> SSpec::first_elements(std::size_t count) const {
  std::vector<std::uint64_t> out;
  if (const auto* beta = std::get_if<BetaSpec>(&repr_)) {
    std::uint64_t sum = 0;
    for (std::uint64_t i = 0; out.size() < count; ++i) {
      out.push_back(sum);
      sum += 1 + beta_value(*beta, i);
    }
    return out;
  }
  for (std::uint64_t n = 0; out.size() < count; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

std::string SSpec::describe() const {
  std::ostringstream os;
  if (const auto* mod = std::get_if<ModularSet>(&repr_)) {
    if (mod->m == 1) return "omega";
    os << "mod(" << mod->m << ",{";
    for (std::size_t i = 0; i < mod->residues.size(); ++i) os << (i ? "," : "") << mod->residues[i];
    os << "})";
    return os.str();
  }
  std::visit(
      [&os](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PeriodicBeta>) {
          os << "periodic(";
          for (auto v : b.pre) os << v << ' ';
          os << '|';
          for (auto v : b.period) os << ' ' << v;
          os << ')';
        } else if constexpr (std::is_same_v<T, LouveauBeta>) {
          os << "louveau(" << b.alpha.to_string() << ')';
        } else {
          os << "shift(" << b.n << ')';
        }
      },
      std::get<BetaSpec>(repr_));
  return os.str();
}

SMembership::SMembership(SSpec spec, std::uint64_t initial)
    : spec_(std::move(spec)), bits_(spec_.materialize(initial)) {}

bool SMembership::operator()(std::uint64_t n) {
  if (n >= bits_.size()) bits_ = spec_.materialize(std::max<std::uint64_t>(n, 2 * bits_.size()));
  return bits_[n];
}

}  // namespace cantor

#include "cantor/kst.hpp"

#include <set>
#include <stdexcept>

#include "cantor/sampling.hpp"

namespace cantor {

std::optional<std::uint64_t> NestedFamily::min_below(std::uint64_t n, std::uint64_t horizon) const {
  for (std::uint64_t k = 0; k < horizon; ++k)
    if (in_s(n, k)) return k;
  return std::nullopt;
}

bool Pow2Family::in_s(std::uint64_t n, std::uint64_t k) const {
  if (n >= 63) return false;
  return k > 0 && k % (std::uint64_t{1} << n) == 0;
}

std::uint64_t Pow2Family::f(std::uint64_t n, std::uint64_t k) const {
  if (!in_s(n, k)) throw std::invalid_argument("f_n is only defined on S_n");
  const std::uint64_t m = k >> n;
  return (2 * m - 1) << n;
}

TritWord::TritWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != '0' && c != '1' && c != '?') throw std::invalid_argument("trit words use only 0, 1 and ?");
}

TritWord g_eval(const NestedFamily& fam, std::uint64_t n, const TritWord& a) {
  std::string out(a.size(), '?');
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!fam.in_s(n, k)) {
      out[k] = a[k];
      continue;
    }
    const std::uint64_t src = fam.f(n, k);
    if (src < a.size()) out[k] = a[src];
  }
  return TritWord(std::move(out));
}

FamilyReport check_family(const NestedFamily& fam, std::uint64_t n_max, std::uint64_t horizon) {
  FamilyReport rep;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::set<std::uint64_t> images;
    std::uint64_t layer = 0, layer_first_half = 0;
    for (std::uint64_t k = 0; k < horizon; ++k) {
      if (fam.in_s(n + 1, k) && !fam.in_s(n, k)) rep.nested = false;
      if (fam.in_s(n, k) && !fam.in_s(n + 1, k)) {
        ++layer;
        if (k < horizon / 2) ++layer_first_half;
      }
      if (!fam.in_s(n, k)) continue;
      const std::uint64_t v = fam.f(n, k);
      if (!images.insert(v).second) rep.f_injective = false;
      if (!fam.in_s(n, v) || fam.in_s(n + 1, v)) rep.f_in_layer = false;
    }
    if (layer == 0 || layer == layer_first_half) rep.layers_grow = false;
  }
  // Some level must already exclude the whole horizon.
  bool exhausted = false;
  for (std::uint64_t n = 0; n < 64 && !exhausted; ++n) exhausted = !fam.min_below(n, horizon);
  rep.intersection_empty = exhausted;
  return rep;
}

namespace {

std::size_t compare_known(const TritWord& x, const TritWord& y, CompositionReport& rep) {
  std::size_t determined = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x.known(k) || !y.known(k)) continue;
    ++determined;
    if (x[k] != y[k]) {
      ++rep.disagreements;
      if (!rep.counterexample) rep.counterexample = "position " + std::to_string(k);
    }
  }
  return determined;
}

}  // namespace

CompositionReport composition_law_check(const NestedFamily& fam, std::uint64_t m, std::uint64_t n,
                                        std::size_t horizon, std::size_t samples, std::mt19937_64& rng) {
  if (m >= n) throw std::invalid_argument("composition law needs m < n");
  CompositionReport rep;
  for (std::size_t i = 0; i < samples; ++i) {
    const TritWord a = TritWord::from(random_word(rng, horizon));
    rep.determined_positions += compare_known(g_eval(fam, m, g_eval(fam, n, a)), g_eval(fam, m, a), rep);
    ++rep.samples;
  }
  return rep;
}

CompositionReport triple_law_check(const NestedFamily& fam, std::uint64_t m, std::uint64_t n, std::uint64_t p,
                                   std::size_t horizon, std::size_t samples, std::mt19937_64& rng) {
  if (m >= n || m >= p) throw std::invalid_argument("triple law needs m < n and m < p");
  CompositionReport rep;
  for (std::size_t i = 0; i < samples; ++i) {
    const TritWord a = TritWord::from(random_word(rng, horizon));
    const TritWord lhs = g_eval(fam, m, g_eval(fam, n, g_eval(fam, p, a)));
    rep.determined_positions += compare_known(lhs, g_eval(fam, m, a), rep);
    ++rep.samples;
  }
  return rep;
}

StabilityReport cylinder_stability_check(const NestedFamily& fam, std::uint64_t n, const Word& s,
                                         std::size_t horizon, std::size_t samples, std::mt19937_64& rng) {
  if (s.size() > horizon) throw std::invalid_argument("cylinder address longer than the horizon");
  if (const auto least = fam.min_below(n, horizon); least && s.size() >= *least)
    throw std::invalid_argument("cylinder stability needs |s| < min S_n = " + std::to_string(*least));
  StabilityReport rep;
  for (std::size_t i = 0; i < samples; ++i) {
    const Word x = s + random_word(rng, horizon - s.size());
    const TritWord img = g_eval(fam, n, TritWord::from(x));
    ++rep.samples;
    if (img.str().compare(0, s.size(), s.str()) != 0) {
      rep.pass = false;
      if (!rep.counterexample) rep.counterexample = x.str();
    }
  }
  return rep;
}

}  // namespace cantor

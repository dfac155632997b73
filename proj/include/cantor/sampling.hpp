#pragma once

#include <cstdint>
#include <random>

#include "cantor/point.hpp"

namespace cantor {

// Portable draws: the standard distributions are implementation-defined.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

inline Word random_word(std::mt19937_64& rng, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() & 1U));
  return w;
}

inline DescribedPoint random_point(std::mt19937_64& rng, std::size_t max_pre, std::size_t max_period) {
  Word pre = random_word(rng, uniform_below(rng, max_pre + 1));
  Word period = random_word(rng, 1 + uniform_below(rng, max_period));
  return DescribedPoint(std::move(pre), std::move(period));
}

}  // namespace cantor

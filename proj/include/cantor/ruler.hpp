#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cantor/point.hpp"

namespace cantor {

using AlphaSpec = DescribedPoint;

// 2-adic valuation of i+1.
std::uint64_t ruler_val(std::uint64_t i) noexcept;

// gamma(4n + 2e) = e, gamma(2n + 1) = alpha(n).
int gamma_alpha(const AlphaSpec& alpha, std::uint64_t n);
int beta_alpha(const AlphaSpec& alpha, std::uint64_t i);
Word beta_alpha_prefix(const AlphaSpec& alpha, std::size_t len);

struct PeriodicBeta {
  std::vector<std::uint64_t> pre;
  std::vector<std::uint64_t> period;  // nonempty
};
struct LouveauBeta {
  AlphaSpec alpha;
};
struct ShiftBeta {
  std::uint64_t n = 0;  // beta(i) = i + n
};
using BetaSpec = std::variant<PeriodicBeta, LouveauBeta, ShiftBeta>;

std::uint64_t beta_value(const BetaSpec& beta, std::uint64_t i);

// { n : n mod m in {0} u F }
struct ModularSet {
  std::uint64_t m = 1;
  std::vector<std::uint64_t> residues;
};

// A set S of naturals with 0 in S and S infinite: either S_beta (the partial
// sums of 1 + beta) or a modular set.
class SSpec {
 public:
  static SSpec from_beta(BetaSpec beta);
  static SSpec modular(std::uint64_t m, std::vector<std::uint64_t> residues);
  static SSpec omega() { return modular(1, {}); }
  static SSpec louveau(const AlphaSpec& alpha) { return from_beta(LouveauBeta{alpha}); }
  static SSpec shift(std::uint64_t n) { return from_beta(ShiftBeta{n}); }

  bool contains(std::uint64_t n) const;
  // Membership bitmap of S on [0, upto].
  std::vector<bool> materialize(std::uint64_t upto) const;
  // Elements of S in increasing order, first `count` of them.
  std::vector<std::uint64_t> first_elements(std::size_t count) const;

  std::string describe() const;
  const std::variant<BetaSpec, ModularSet>& repr() const noexcept { return repr_; }

 private:
  explicit SSpec(std::variant<BetaSpec, ModularSet> r) : repr_(std::move(r)) {}
  std::variant<BetaSpec, ModularSet> repr_;
};

// Cached membership for repeated queries; grows on demand.
class SMembership {
 public:
  explicit SMembership(SSpec spec, std::uint64_t initial = 1024);
  bool operator()(std::uint64_t n);
  const SSpec& spec() const noexcept { return spec_; }

 private:
  SSpec spec_;
  std::vector<bool> bits_;
};

}  // namespace cantor

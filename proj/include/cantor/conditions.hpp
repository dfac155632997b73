#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cantor/cylinders.hpp"
#include "cantor/outcome.hpp"
#include "cantor/ruler.hpp"

namespace cantor {

struct Bounds {
  std::uint64_t p_max = 8;
  std::uint64_t q_max = 512;
  std::uint64_t k_max = 64;
  std::uint64_t c_max = 4096;
  std::uint64_t n_scan = std::uint64_t{1} << 18;
  std::uint64_t n_max = 24;  // largest map index tried by witness searches

  void validate() const;
};

// c + (S n [0,p]) = S n (c + [0,p])
bool window_identity(SMembership& s, std::uint64_t c, std::uint64_t p);
// c + (S n [0,p]) = S' n (c + [0,p])
bool translate_equal(SMembership& s, SMembership& s2, std::uint64_t c, std::uint64_t p);
// c - (S n [0,p]) = S' n (c - [0,p]), as sets of integers
bool reflect_equal(SMembership& s, SMembership& s2, std::uint64_t c, std::uint64_t p);

struct MRow {
  std::uint64_t p = 0;
  Outcome status = Outcome::Pass;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> offending_q;  // when no k <= k_max works
};
struct MReport {
  Outcome status = Outcome::Pass;
  std::vector<MRow> rows;
};

// Least k per p <= p_max; bound exhaustion is inconclusive, never a refutation.
MReport check_M(const SSpec& s, const Bounds& b);
MRow check_M_at(SMembership& s, std::uint64_t p, const Bounds& b);

struct WitnessCert {
  std::string condition;
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::uint64_t> params;
  std::uint64_t bound = 0;
  Outcome status = Outcome::Pass;
  std::string note;

  friend bool operator==(const WitnessCert&, const WitnessCert&) = default;
};

// K = 2^{n0} - 1 for the least n0 with K >= P; replays the periodicity of
// beta_alpha and the conversion to (M) with k = 2K + 1 for every q <= q_max.
WitnessCert mm_witness(const AlphaSpec& alpha, std::uint64_t P, const Bounds& b);

enum class HStrategy { Greedy, LeastIndex };

struct HWitness {
  Outcome status = Outcome::Inconclusive;
  std::uint64_t n = 0;
  Cylinder cylinder;
  std::uint64_t card = 0;
  std::string note;
};

// n >= l and a cylinder inside the domain of f^C_n, with image inside C and
// prefix-card satisfying the window identity at p.
HWitness h_witness(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, const Bounds& b,
                   HStrategy strategy = HStrategy::Greedy);
bool is_h_witness(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, std::uint64_t n,
                  const Word& cylinder);

struct PerpReport {
  Outcome status = Outcome::Pass;
  std::uint64_t p = 0;
  std::uint64_t checked_to = 0;
  std::optional<std::uint64_t> refuting_c;
};

PerpReport check_perp(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b);
PerpReport check_perp_inv(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b);

WitnessCert perpperp_witness(const AlphaSpec& alpha, const AlphaSpec& alpha2, const Bounds& b);

struct ShiftReport {
  std::uint64_t n = 0;
  std::size_t pairs = 0;
  std::size_t members = 0;
  std::size_t mismatches = 0;
  bool gaps_ok = false;
  std::optional<std::string> counterexample;
  Outcome status() const noexcept {
    return mismatches == 0 && gaps_ok ? Outcome::Pass : Outcome::Refuted;
  }
};

// B_n = A^{S_{beta_n}} with beta_n(i) = i + n.
ShiftReport shift_family_check(std::uint64_t n, std::size_t samples, std::mt19937_64& rng,
                               std::uint64_t gap_horizon = 100);

// Certificates wrapping the reports above; each records what replay needs.
WitnessCert certify_M(const SSpec& s, const Bounds& b);
WitnessCert certify_perp(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b, bool inverse);
WitnessCert certify_h(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, const Bounds& b,
                      HStrategy strategy);
WitnessCert certify_shift(std::uint64_t n, std::size_t samples, std::uint64_t seed);

}  // namespace cantor

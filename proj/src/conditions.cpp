#include "cantor/conditions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cantor/io.hpp"
#include "cantor/sampling.hpp"

namespace cantor {

void Bounds::validate() const {
  if (p_max < 1 || q_max < 1 || k_max < 1 || c_max < 1 || n_scan < 1 || n_max < 1)
    throw std::invalid_argument("all bounds must be at least 1");
}

bool window_identity(SMembership& s, std::uint64_t c, std::uint64_t p) { return translate_equal(s, s, c, p); }

bool translate_equal(SMembership& s, SMembership& s2, std::uint64_t c, std::uint64_t p) {
  for (std::uint64_t j = 0; j <= p; ++j)
    if (s(j) != s2(c + j)) return false;
  return true;
}

bool reflect_equal(SMembership& s, SMembership& s2, std::uint64_t c, std::uint64_t p) {
  for (std::uint64_t j = 0; j <= p; ++j) {
    const bool rhs = j <= c && s2(c - j);
    if (s(j) != rhs) return false;
  }
  return true;
}

MRow check_M_at(SMembership& s, std::uint64_t p, const Bounds& b) {
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t top = b.q_max + b.k_max;
  std::vector<std::uint64_t> next(top + 2, none);
  for (std::uint64_t c = top + 1; c-- > 0;) next[c] = window_identity(s, c, p) ? c : next[c + 1];
  MRow row;
  row.p = p;
  std::uint64_t k = 0;
  for (std::uint64_t q = 0; q <= b.q_max; ++q) {
    if (next[q] == none || next[q] - q > b.k_max) {
      row.status = Outcome::Inconclusive;
      row.offending_q = q;
      return row;
    }
    k = std::max(k, next[q] - q);
  }
  row.k = k;
  return row;
}

MReport check_M(const SSpec& s, const Bounds& b) {
  b.validate();
  SMembership mem(s, b.q_max + b.k_max + b.p_max + 1);
  MReport r;
  for (std::uint64_t p = 0; p <= b.p_max; ++p) {
    r.rows.push_back(check_M_at(mem, p, b));
    r.status = combine(r.status, r.rows.back().status);
  }
  return r;
}

WitnessCert mm_witness(const AlphaSpec& alpha, std::uint64_t P, const Bounds& b) {
  std::uint64_t n0 = 0;
  while ((std::uint64_t{1} << n0) - 1 < P) ++n0;
  const std::uint64_t block = std::uint64_t{1} << n0;
  const std::uint64_t K = block - 1;

  auto fail = [&](const std::string& what) {
    throw InvariantViolation("(MM) witness failed for alpha=" + alpha.to_string() + " P=" + std::to_string(P) +
                             ": " + what);
  };

  const std::uint64_t horizon = b.q_max + 2 * block + P + 2;
  const Word beta = beta_alpha_prefix(alpha, static_cast<std::size_t>(horizon));
  for (std::uint64_t Q = 0; Q <= b.q_max; ++Q) {
    const std::uint64_t C = block * ((Q + block - 1) / block);
    if (C < Q || C > Q + K) fail("C out of [Q, Q+K] at Q=" + std::to_string(Q));
    for (std::uint64_t i = 0; i < P; ++i)
      if (beta[i] != beta[C + i]) fail("shifted prefix mismatch at Q=" + std::to_string(Q));
  }

  // Conversion to (M): c is the C-th partial sum of 1 + beta.
  std::vector<std::uint64_t> sigma{0};
  for (std::uint64_t i = 0; i + 1 < horizon; ++i) sigma.push_back(sigma.back() + 1 + beta[i]);
  SMembership mem(SSpec::louveau(alpha), sigma.back() + P + 1);
  const std::uint64_t k = 2 * K + 1;
  for (std::uint64_t q = 0; q <= b.q_max; ++q) {
    const auto Q = static_cast<std::uint64_t>(std::lower_bound(sigma.begin(), sigma.end(), q) - sigma.begin());
    const std::uint64_t C = block * ((Q + block - 1) / block);
    if (C >= sigma.size()) fail("partial sums too short");
    const std::uint64_t c = sigma[C];
    if (c < q || c > q + k) fail("c out of [q, q+k] at q=" + std::to_string(q));
    if (!window_identity(mem, c, P)) fail("window identity fails at q=" + std::to_string(q));
  }

  WitnessCert cert;
  cert.condition = "MM";
  cert.inputs["alpha"] = alpha.to_string();
  cert.params = {{"P", P}, {"n0", n0}, {"K", K}, {"k", k}, {"q_max", b.q_max}};
  cert.bound = b.q_max;
  cert.status = Outcome::Pass;
  cert.note = "verified for q <= q_max; witness arithmetic consistent";
  return cert;
}

bool is_h_witness(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, std::uint64_t n,
                  const Word& w) {
  if (n < l || w.size() <= n || w[n] != 0) return false;
  if (!c.covers(w) || !c.covers(w.flipped(n))) return false;
  SMembership mem(s);
  const auto theta = w.prefix(n).card();
  return mem(theta) && window_identity(mem, theta, p);
}

namespace {

HWitness least_index_search(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p,
                            const Bounds& b) {
  SMembership mem(s);
  for (std::uint64_t n = l; n <= b.n_max; ++n) {
    std::optional<Word> best;
    for (const Word& a : c.addresses()) {
      std::optional<Word> cand;
      if (a.size() > n) {
        const auto theta = a.prefix(n).card();
        if (a[n] != 0 || !window_identity(mem, theta, p)) continue;
        const ClopenSet part = c.intersect(ClopenSet({a.flipped(n)}));
        if (part.empty()) continue;
        cand = part.addresses().front().flipped(n);
      } else {
        // Lexicographically least completion with t ones is 0^{L-t} 1^t.
        const std::size_t L = n - a.size();
        for (std::size_t t = 0; t <= L && !cand; ++t)
          if (window_identity(mem, a.card() + t, p)) cand = a + Word::zeros(L - t) + Word::ones(t) + Word("0");
      }
      if (cand && (!best || *cand < *best)) best = cand;
    }
    if (best) {
      HWitness h;
      h.status = Outcome::Pass;
      h.n = n;
      h.cylinder = Cylinder{*best};
      h.card = best->prefix(n).card();
      h.note = "least index, lexicographically least cylinder";
      return h;
    }
  }
  HWitness h;
  h.note = "no witness with n <= n_max";
  return h;
}

HWitness greedy_search(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, const Bounds& b) {
  SMembership mem(s, b.q_max + b.k_max + p + 1);
  const MRow row = check_M_at(mem, p, b);
  HWitness h;
  if (!row.k) {
    h.note = "(M) not established within bounds at this p";
    return h;
  }
  const std::uint64_t k = *row.k;
  const std::uint64_t M = p + k;
  ASFamily f(s);
  // f^C_q is f_q restricted to C n f_q^{-1}(C).
  auto back_into = [&](std::uint64_t q, const ClopenSet& target) { return c.intersect(f.preimage(q, target)); };

  std::vector<std::uint64_t> qs;
  std::vector<ClopenSet> O;
  ClopenSet T = c;
  std::uint64_t start = l;
  if (M > 0) {
    for (std::uint64_t q = l; q <= b.n_max && qs.empty(); ++q) {
      ClopenSet d = back_into(q, c);
      if (!d.empty()) {
        qs.push_back(q);
        O.push_back(std::move(d));
      }
    }
    while (!qs.empty() && qs.size() < M) {
      bool found = false;
      for (std::uint64_t q = qs.back() + 1; q <= b.n_max && !found; ++q) {
        ClopenSet d = O.back().intersect(back_into(q, O.back()));
        if (!d.empty()) {
          qs.push_back(q);
          O.push_back(std::move(d));
          found = true;
        }
      }
      if (!found) break;
    }
    if (qs.size() < M) {
      h.note = "greedy index sequence exceeds n_max";
      return h;
    }
    T = O.back();
    for (std::size_t r = M; r-- > 0;) T = f.apply(qs[r], T);
    start = std::max(qs.back() + 1, l);
  }

  std::optional<std::uint64_t> n;
  Word beta;
  for (std::uint64_t m = start; m <= b.n_max && !n; ++m) {
    const ClopenSet x = T.intersect(back_into(m, T));
    if (!x.empty()) {
      n = m;
      beta = x.addresses().front();
    }
  }
  if (!n) {
    h.note = "no final index n <= n_max";
    return h;
  }
  const std::uint64_t total = beta.prefix(*n).card();
  if (total < M) throw InvariantViolation("greedy composition lost ones below n");
  const std::uint64_t q = total - M;
  std::optional<std::uint64_t> cval;
  for (std::uint64_t cc = q; cc <= q + k && !cval; ++cc)
    if (window_identity(mem, cc, p)) cval = cc;
  if (!cval) {
    h.note = "no translate in [q, q+k]; q lies beyond the verified range";
    return h;
  }
  const std::uint64_t j = k + q - *cval;
  Word gamma = beta;
  for (std::uint64_t r = 0; r < p + j; ++r) {
    const auto prev = f.preimage(static_cast<std::size_t>(qs[r]), gamma);
    if (!prev) throw InvariantViolation("greedy composition not invertible on the witness");
    gamma = *prev;
  }
  if (gamma.prefix(*n).card() != *cval) throw InvariantViolation("card of greedy witness differs from c");
  if (!is_h_witness(s, c, l, p, *n, gamma)) throw InvariantViolation("greedy witness fails validation");
  h.status = Outcome::Pass;
  h.n = *n;
  h.cylinder = Cylinder{gamma};
  h.card = *cval;
  h.note = "greedy index sequence of length " + std::to_string(M);
  return h;
}

}  // namespace

HWitness h_witness(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, const Bounds& b,
                   HStrategy strategy) {
  if (c.empty()) throw std::invalid_argument("h_witness needs a nonempty clopen set");
  try {
    return strategy == HStrategy::Greedy ? greedy_search(s, c, l, p, b) : least_index_search(s, c, l, p, b);
  } catch (const std::length_error&) {
    HWitness h;
    h.note = "cylinder enumeration exceeded its limit";
    return h;
  }
}

namespace {

PerpReport perp_scan(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b, bool inverse) {
  SMembership m1(s, p + 1), m2(s2, b.c_max + p + 1);
  PerpReport r;
  r.p = p;
  r.checked_to = b.c_max;
  for (std::uint64_t c = 0; c <= b.c_max; ++c) {
    const bool equal = inverse ? reflect_equal(m1, m2, c, p) : translate_equal(m1, m2, c, p);
    if (equal) {
      r.status = Outcome::Refuted;
      r.refuting_c = c;
      return r;
    }
  }
  return r;
}

}  // namespace

PerpReport check_perp(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b) {
  return perp_scan(s, s2, p, b, false);
}

PerpReport check_perp_inv(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b) {
  return perp_scan(s, s2, p, b, true);
}

WitnessCert perpperp_witness(const AlphaSpec& alpha, const AlphaSpec& alpha2, const Bounds& b) {
  const auto diff = first_difference(alpha, alpha2);
  if (!diff) throw std::invalid_argument("perpperp witness needs distinct alphas");
  // Even positions of gamma do not depend on alpha.
  const std::uint64_t n0 = 2 * *diff + 1;
  for (std::uint64_t i = 0; i < n0; ++i)
    if (gamma_alpha(alpha, i) != gamma_alpha(alpha2, i)) throw InvariantViolation("n0 is not minimal");
  std::uint64_t n1 = n0 + 2;
  while (gamma_alpha(alpha2, n1) == gamma_alpha(alpha2, n0 + 1)) ++n1;
  const std::uint64_t n = n1 + 2;

  WitnessCert cert;
  cert.condition = "PERPPERP";
  cert.inputs = {{"alpha", alpha.to_string()}, {"alpha2", alpha2.to_string()}};
  cert.params = {{"n0", n0}, {"n1", n1}, {"n", n}, {"n_scan", b.n_scan}, {"c_max", b.c_max}};
  if (n > 26) {
    cert.status = Outcome::Inconclusive;
    cert.note = "pattern length 2^n - 1 beyond scan capacity";
    return cert;
  }
  const std::uint64_t P = (std::uint64_t{1} << n) - 1;
  const std::uint64_t p = 2 * P;
  const std::uint64_t scan = std::max(b.n_scan, 4 * P);
  cert.params["P"] = P;
  cert.params["p"] = p;
  cert.params["scan_length"] = scan;

  const Word pattern = beta_alpha_prefix(alpha, static_cast<std::size_t>(P));
  if (!is_symmetric(pattern)) throw InvariantViolation("beta_alpha prefix of length 2^n - 1 is not a palindrome");
  const Word text = beta_alpha_prefix(alpha2, static_cast<std::size_t>(scan));
  const auto hits = count_occurrences(pattern, text) + count_occurrences(reversed(pattern), text);
  cert.params["occurrences"] = hits;
  if (hits != 0)
    throw InvariantViolation("beta_alpha prefix occurs in beta_alpha' for alpha=" + alpha.to_string() +
                             " alpha'=" + alpha2.to_string());

  const SSpec s = SSpec::louveau(alpha), s2 = SSpec::louveau(alpha2);
  const PerpReport fwd = check_perp(s, s2, p, b);
  const PerpReport inv = check_perp_inv(s, s2, p, b);
  if (fwd.status != Outcome::Pass || inv.status != Outcome::Pass)
    throw InvariantViolation("translation inequality fails at p = 2P");

  cert.bound = scan;
  cert.status = Outcome::Pass;
  cert.note = "verified to the scan length; proof-witness arithmetic consistent";
  return cert;
}

ShiftReport shift_family_check(std::uint64_t n, std::size_t samples, std::mt19937_64& rng,
                               std::uint64_t gap_horizon) {
  const SSpec lower = SSpec::shift(n), upper = SSpec::shift(n + 1);
  const Word lift = Word::ones(static_cast<std::size_t>(n + 1));
  ShiftReport r;
  r.n = n;
  for (std::size_t i = 0; i < samples; ++i) {
    DescribedPoint x, y;
    if (i % 2 == 0) {
      const Word s = random_word(rng, uniform_below(rng, 9));
      const DescribedPoint tail = random_point(rng, 4, 3);
      x = tail.prepend(s.appended(0));
      y = tail.prepend(s.appended(1));
    } else {
      x = random_point(rng, 6, 3);
      y = uniform_below(rng, 2) ? x.flipped(uniform_below(rng, 10)) : random_point(rng, 6, 3);
    }
    ++r.pairs;
    const bool in_upper = decide_relation(RelationKind::AS, x, y, &upper);
    const bool in_lower = decide_relation(RelationKind::AS, x.prepend(lift), y.prepend(lift), &lower);
    if (in_upper) ++r.members;
    if (in_upper != in_lower) {
      ++r.mismatches;
      if (!r.counterexample) r.counterexample = x.to_string() + " , " + y.to_string();
    }
  }
  const auto elems = upper.first_elements(static_cast<std::size_t>(gap_horizon + 2));
  r.gaps_ok = true;
  for (std::uint64_t l = 0; l <= gap_horizon; ++l)
    if (elems[l + 1] - elems[l] != l + n + 2) r.gaps_ok = false;
  return r;
}

WitnessCert certify_M(const SSpec& s, const Bounds& b) {
  const MReport r = check_M(s, b);
  WitnessCert cert;
  cert.condition = "M";
  cert.inputs["S"] = sspec_to_json(s);
  cert.params = {{"p_max", b.p_max}, {"q_max", b.q_max}, {"k_max", b.k_max}};
  for (const MRow& row : r.rows) {
    if (row.k) cert.params["k_p" + std::to_string(row.p)] = *row.k;
    if (row.offending_q) cert.params["offending_q_p" + std::to_string(row.p)] = *row.offending_q;
  }
  cert.bound = b.q_max;
  cert.status = r.status;
  cert.note = r.status == Outcome::Pass ? "least k per p, every q <= q_max" : "bound exhausted";
  return cert;
}

WitnessCert certify_perp(const SSpec& s, const SSpec& s2, std::uint64_t p, const Bounds& b, bool inverse) {
  const PerpReport r = inverse ? check_perp_inv(s, s2, p, b) : check_perp(s, s2, p, b);
  WitnessCert cert;
  cert.condition = inverse ? "PERP_INV" : "PERP";
  cert.inputs = {{"S", sspec_to_json(s)}, {"S2", sspec_to_json(s2)}};
  cert.params = {{"p", p}, {"c_max", b.c_max}};
  if (r.refuting_c) cert.params["refuting_c"] = *r.refuting_c;
  cert.bound = b.c_max;
  cert.status = r.status;
  cert.note = r.status == Outcome::Pass ? "inequality verified for c <= c_max" : "translate found";
  return cert;
}

WitnessCert certify_h(const SSpec& s, const ClopenSet& c, std::uint64_t l, std::uint64_t p, const Bounds& b,
                      HStrategy strategy) {
  const HWitness h = h_witness(s, c, l, p, b, strategy);
  WitnessCert cert;
  cert.condition = "H";
  std::string addrs;
  for (const Word& a : c.addresses()) addrs += (addrs.empty() ? "" : ",") + a.str();
  cert.inputs = {{"S", sspec_to_json(s)},
                 {"C", addrs},
                 {"strategy", strategy == HStrategy::Greedy ? "greedy" : "least-index"}};
  cert.params = {{"l", l}, {"p", p}, {"n_max", b.n_max}, {"q_max", b.q_max}, {"k_max", b.k_max}};
  if (h.status == Outcome::Pass) {
    cert.params["n"] = h.n;
    cert.params["card"] = h.card;
    cert.inputs["cylinder"] = h.cylinder.address.str();
  }
  cert.bound = b.n_max;
  cert.status = h.status;
  cert.note = h.note;
  return cert;
}

WitnessCert certify_shift(std::uint64_t n, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ShiftReport r = shift_family_check(n, samples, rng);
  WitnessCert cert;
  cert.condition = "SHIFT";
  cert.params = {{"n", n},
                 {"samples", samples},
                 {"seed", seed},
                 {"members", r.members},
                 {"mismatches", r.mismatches},
                 {"gaps_ok", r.gaps_ok ? 1U : 0U}};
  cert.bound = samples;
  cert.status = r.status();
  cert.note = r.counterexample.value_or("");
  return cert;
}

}  // namespace cantor

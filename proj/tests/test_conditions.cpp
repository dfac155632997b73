#include "doctest.h"
#include "oracles.hpp"

#include "cantor/conditions.hpp"
#include "cantor/io.hpp"

using namespace cantor;

namespace {

// Least k with every q <= q_max having a translate c in [q, q+k].
std::optional<std::uint64_t> brute_k(const std::vector<bool>& in, std::uint64_t p, std::uint64_t q_max,
                                     std::uint64_t k_max) {
  std::uint64_t k = 0;
  for (std::uint64_t q = 0; q <= q_max; ++q) {
    std::optional<std::uint64_t> found;
    for (std::uint64_t c = q; c <= q + k_max && !found; ++c) {
      bool same = true;
      for (std::uint64_t j = 0; j <= p && same; ++j) same = in[j] == in[c + j];
      if (same) found = c - q;
    }
    if (!found) return std::nullopt;
    k = std::max(k, *found);
  }
  return k;
}

bool valid_h(const std::vector<bool>& in, const ClopenSet& c, std::uint64_t l, std::uint64_t p, std::uint64_t n,
             const std::string& w) {
  if (n < l || w.size() <= n || w[n] != '0') return false;
  std::string flipped = w;
  flipped[n] = '1';
  if (!c.covers(Word(w)) || !c.covers(Word(flipped))) return false;
  const std::size_t theta = oracle::ones(w.substr(0, n));
  if (!in[theta]) return false;
  for (std::uint64_t j = 0; j <= p; ++j)
    if (in[j] != in[theta + j]) return false;
  return true;
}

Bounds small_bounds() {
  Bounds b;
  b.q_max = 128;
  b.k_max = 64;
  b.c_max = 256;
  return b;
}

}  // namespace

TEST_SUITE("conditions") {
  TEST_CASE("condition (M) examples") {
    Bounds b = small_bounds();
    b.p_max = 4;
    const auto evens = check_M(SSpec::modular(2, {}), b);
    CHECK(evens.status == Outcome::Pass);
    CHECK(evens.rows[4].k == std::optional<std::uint64_t>{1});
    const auto all = check_M(SSpec::omega(), b);
    for (const auto& row : all.rows) CHECK(row.k == std::optional<std::uint64_t>{0});
    b.p_max = 3;
    const auto louv = check_M(SSpec::louveau(AlphaSpec::parse("|0")), b);
    CHECK(louv.status == Outcome::Pass);
    CHECK(*louv.rows[3].k <= 7);
  }

  TEST_CASE("condition (M) against the brute-force scan") {
    Bounds b = small_bounds();
    b.p_max = 6;
    for (std::uint64_t m = 1; m <= 5; ++m)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        std::vector<std::uint64_t> f;
        std::set<std::uint64_t> fs;
        for (std::uint64_t r = 1; r < m; ++r)
          if ((mask >> (r - 1)) & 1U) {
            f.push_back(r);
            fs.insert(r);
          }
        const auto in = oracle::modular(m, fs, 1000);
        const auto rep = check_M(SSpec::modular(m, f), b);
        for (const auto& row : rep.rows) REQUIRE(row.k == brute_k(in, row.p, b.q_max, b.k_max));
      }
  }

  TEST_CASE("condition (M) bound exhaustion is inconclusive") {
    Bounds b = small_bounds();
    b.k_max = 2;
    b.p_max = 6;
    const auto r = check_M(SSpec::shift(0), b);
    CHECK(r.status == Outcome::Inconclusive);
    for (const auto& row : r.rows) CHECK(row.status != Outcome::Refuted);
  }

  TEST_CASE("(MM) witness") {
    const auto a = AlphaSpec::parse("|0");
    const Bounds b = small_bounds();
    auto K = [&](std::uint64_t P) { return mm_witness(a, P, b).params.at("K"); };
    CHECK(K(3) == 3);
    CHECK(mm_witness(a, 3, b).params.at("n0") == 2);
    CHECK(K(1) == 1);
    CHECK(K(0) == 0);
    CHECK(K(4) == 7);
    for (int r = 0; r < 10; ++r) {
      const auto o = gen::point(3, 3);
      const AlphaSpec alpha(Word(o.pre), Word(o.period));
      const auto in = oracle::partial_sums([&](std::uint64_t i) { return oracle::beta(o, i); }, 4000);
      for (std::uint64_t P = 0; P <= 6; ++P) {
        const auto cert = mm_witness(alpha, P, b);
        REQUIRE(cert.status == Outcome::Pass);
        const auto k = brute_k(in, P, b.q_max, 2 * cert.params.at("K") + 1);
        REQUIRE(k.has_value());
        REQUIRE(*k <= cert.params.at("k"));
      }
    }
  }

  TEST_CASE("witness cylinders for the (H) step") {
    const Bounds b;
    const auto evens = SSpec::modular(2, {});
    const auto evens_in = oracle::modular(2, {}, 200);
    const auto all_in = oracle::modular(1, {}, 200);
    for (auto strategy : {HStrategy::Greedy, HStrategy::LeastIndex}) {
      const auto h1 = h_witness(evens, ClopenSet::full(), 0, 2, b, strategy);
      REQUIRE(h1.status == Outcome::Pass);
      CHECK(valid_h(evens_in, ClopenSet::full(), 0, 2, h1.n, h1.cylinder.address.str()));
      const auto h2 = h_witness(SSpec::omega(), ClopenSet({Word("1")}), 1, 1, b, strategy);
      REQUIRE(h2.status == Outcome::Pass);
      CHECK(valid_h(all_in, ClopenSet({Word("1")}), 1, 1, h2.n, h2.cylinder.address.str()));
    }
    const auto least = h_witness(SSpec::omega(), ClopenSet::full(), 0, 5, b, HStrategy::LeastIndex);
    CHECK(least.n == 0);
    CHECK(least.cylinder.address.str() == "0");
    CHECK(is_h_witness(evens, ClopenSet::full(), 0, 2, 2, Word("110")));
    CHECK(is_h_witness(SSpec::omega(), ClopenSet({Word("1")}), 1, 1, 2, Word("110")));
    CHECK_FALSE(is_h_witness(evens, ClopenSet::full(), 0, 2, 1, Word("10")));
  }

  TEST_CASE("(H) witnesses validate against the oracle, random") {
    const Bounds b;
    const std::vector<std::pair<SSpec, std::vector<bool>>> specs = {
        {SSpec::omega(), oracle::modular(1, {}, 400)},
        {SSpec::modular(2, {}), oracle::modular(2, {}, 400)},
        {SSpec::modular(3, {1}), oracle::modular(3, {1}, 400)},
        {SSpec::shift(0), oracle::partial_sums([](std::uint64_t i) { return i; }, 400)}};
    for (const auto& [s, in] : specs)
      for (int r = 0; r < 12; ++r) {
        const ClopenSet c({Word(gen::bits(gen::below(3))), Word(gen::bits(1 + gen::below(3)))});
        const std::uint64_t l = gen::below(3), p = gen::below(4);
        for (auto strategy : {HStrategy::Greedy, HStrategy::LeastIndex}) {
          const auto h = h_witness(s, c, l, p, b, strategy);
          if (h.status != Outcome::Pass) continue;
          REQUIRE(valid_h(in, c, l, p, h.n, h.cylinder.address.str()));
        }
      }
  }

  TEST_CASE("translation inequalities") {
    Bounds b = small_bounds();
    CHECK(check_perp(SSpec::modular(2, {}), SSpec::modular(3, {}), 2, b).status == Outcome::Pass);
    CHECK(check_perp(SSpec::omega(), SSpec::modular(2, {}), 1, b).status == Outcome::Pass);
    for (const SSpec& s : {SSpec::omega(), SSpec::modular(3, {2}), SSpec::shift(1)}) {
      const auto r = check_perp(s, s, 3, b);
      CHECK(r.status == Outcome::Refuted);
      CHECK(r.refuting_c == std::optional<std::uint64_t>{0});
    }
  }

  TEST_CASE("translation inequalities against the scan oracle, random") {
    Bounds b = small_bounds();
    b.c_max = 100;
    for (int r = 0; r < 40; ++r) {
      const std::uint64_t m1 = 1 + gen::below(5), m2 = 1 + gen::below(5), p = gen::below(5);
      std::set<std::uint64_t> f1, f2;
      if (m1 > 1 && gen::below(2)) f1.insert(1 + gen::below(m1 - 1));
      if (m2 > 1 && gen::below(2)) f2.insert(1 + gen::below(m2 - 1));
      const SSpec s1 = SSpec::modular(m1, {f1.begin(), f1.end()}), s2 = SSpec::modular(m2, {f2.begin(), f2.end()});
      const auto a = oracle::modular(m1, f1, 300), c = oracle::modular(m2, f2, 300);
      std::optional<std::uint64_t> fwd, inv;
      for (std::uint64_t t = 0; t <= b.c_max; ++t) {
        bool eq = true, req = true;
        for (std::uint64_t j = 0; j <= p; ++j) {
          eq = eq && a[j] == c[t + j];
          req = req && a[j] == (j <= t && c[t - j]);
        }
        if (eq && !fwd) fwd = t;
        if (req && !inv) inv = t;
      }
      REQUIRE(check_perp(s1, s2, p, b).refuting_c == fwd);
      REQUIRE(check_perp_inv(s1, s2, p, b).refuting_c == inv);
    }
  }

  TEST_CASE("(perp perp) witnesses") {
    Bounds b;
    b.c_max = 512;
    const auto c1 = perpperp_witness(AlphaSpec::parse("|0"), AlphaSpec::parse("1|0"), b);
    CHECK(c1.params.at("n0") == 1);
    CHECK(c1.params.at("n1") == 3);
    CHECK(c1.params.at("n") == 5);
    CHECK(c1.params.at("P") == 31);
    CHECK(c1.params.at("occurrences") == 0);
    const auto c2 = perpperp_witness(AlphaSpec::parse("|0"), AlphaSpec::parse("01|0"), b);
    CHECK(c2.params.at("n0") == 3);
    CHECK(c2.params.at("P") == (std::uint64_t{1} << (c2.params.at("n1") + 2)) - 1);
    CHECK_THROWS_AS(perpperp_witness(AlphaSpec::parse("|0"), AlphaSpec::parse("0|0"), b), std::invalid_argument);
  }

  TEST_CASE("(perp perp) parameters against gamma minimality, random") {
    Bounds b;
    b.c_max = 256;
    b.n_scan = 1 << 14;
    for (int r = 0; r < 15; ++r) {
      const auto x = gen::point(3, 2), y = gen::point(3, 2);
      const AlphaSpec a(Word(x.pre), Word(x.period)), a2(Word(y.pre), Word(y.period));
      if (a == a2) continue;
      const auto cert = perpperp_witness(a, a2, b);
      if (cert.status != Outcome::Pass) continue;
      std::uint64_t n0 = 0;
      while (oracle::gamma(x, n0) == oracle::gamma(y, n0)) ++n0;
      REQUIRE(cert.params.at("n0") == n0);
      std::uint64_t n1 = n0 + 2;
      while (oracle::gamma(y, n1) == oracle::gamma(y, n0 + 1)) ++n1;
      REQUIRE(cert.params.at("n1") == n1);
      const auto pattern = oracle::beta_word(x, static_cast<std::size_t>(cert.params.at("P")));
      const auto text = oracle::beta_word(y, static_cast<std::size_t>(cert.params.at("scan_length")));
      REQUIRE(text.find(pattern) == std::string::npos);
      REQUIRE(text.find(std::string(pattern.rbegin(), pattern.rend())) == std::string::npos);
    }
  }

  TEST_CASE("shifted family") {
    CHECK(SSpec::shift(1).first_elements(5) == std::vector<std::uint64_t>{0, 2, 5, 9, 14});
    const auto e = SSpec::shift(3).first_elements(5);
    CHECK(e[4] - e[3] == 7);
    const SSpec b0 = SSpec::shift(0), b1 = SSpec::shift(1);
    CHECK(decide_relation(RelationKind::AS, DescribedPoint::parse("|0"), DescribedPoint::parse("1|0"), &b1));
    CHECK(decide_relation(RelationKind::AS, DescribedPoint::parse("1|0"), DescribedPoint::parse("11|0"), &b0));
    std::mt19937_64 rng(7);
    for (std::uint64_t n = 0; n <= 2; ++n) {
      const auto r = shift_family_check(n, 100, rng);
      CHECK(r.status() == Outcome::Pass);
      CHECK(r.members > 0);
    }
  }

  TEST_CASE("certificates survive a JSON round trip and replay") {
    Bounds b = small_bounds();
    std::vector<WitnessCert> certs = {
        certify_M(SSpec::modular(3, {1}), b),
        certify_perp(SSpec::omega(), SSpec::omega(), 2, b, false),
        certify_perp(SSpec::modular(2, {}), SSpec::modular(3, {}), 2, b, true),
        certify_h(SSpec::modular(2, {}), ClopenSet({Word("1")}), 1, 2, b, HStrategy::Greedy),
        certify_shift(1, 40, 99),
        mm_witness(AlphaSpec::parse("1|01"), 5, b),
    };
    for (const auto& c : certs) {
      const auto back = certificate_from_json(certificate_to_json(c));
      CHECK(back == c);
      CHECK(replay_certificate(back));
    }
    WitnessCert forged = certs[0];
    forged.params["k_p1"] += 1;
    CHECK_FALSE(replay_certificate(forged));
  }

  TEST_CASE("index-set JSON") {
    for (const SSpec& s : {SSpec::omega(), SSpec::modular(3, {1}), SSpec::shift(2),
                           SSpec::louveau(AlphaSpec::parse("10|0")), SSpec::from_beta(PeriodicBeta{{1}, {0, 3}})}) {
      const SSpec back = sspec_from_json(sspec_to_json(s));
      CHECK(back.materialize(300) == s.materialize(300));
      CHECK(sspec_to_json(back) == sspec_to_json(s));
    }
    CHECK_THROWS(sspec_from_json("{\"kind\":\"modular\""));
    CHECK_THROWS(sspec_from_json("{\"kind\":\"nonsense\"}"));
    CHECK(sspec_from_json(R"({"kind":"modular","m":3,"F":[1]})").contains(4));
  }
}

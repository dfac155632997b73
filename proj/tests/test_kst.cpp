#include "doctest.h"
#include "oracles.hpp"

#include "cantor/kst.hpp"

using namespace cantor;

namespace {

// Direct evaluation with f_n(2^n m) = 2^n (2m - 1).
std::string g_ref(std::uint64_t n, const std::string& a) {
  std::string out = a;
  const std::uint64_t step = std::uint64_t{1} << n;
  for (std::uint64_t k = step; k < a.size(); k += step) {
    const std::uint64_t src = (2 * (k / step) - 1) * step;
    out[k] = src < a.size() ? a[src] : '?';
  }
  return out;
}

}  // namespace

TEST_SUITE("kst") {
  const Pow2Family fam;

  TEST_CASE("the default family") {
    const auto r = check_family(fam, 8, 4096);
    CHECK(r.pass());
    CHECK(fam.min_below(2, 100) == std::optional<std::uint64_t>{4});
    CHECK(fam.f(0, 3) == 5);
    CHECK_THROWS(fam.f(1, 3));
  }

  TEST_CASE("evaluation examples") {
    CHECK(g_eval(fam, 0, TritWord("01000000")).str() == "01000???");
    CHECK(g_eval(fam, 5, TritWord("01101100")).str() == "01101100");
    CHECK(g_eval(fam, 1, TritWord("00000000")).str() == "000000?0");
    CHECK_THROWS(TritWord("01x"));
  }

  TEST_CASE("evaluation against the direct formula, random") {
    for (int i = 0; i < 300; ++i) {
      const auto a = gen::bits(1 + gen::below(80));
      const std::uint64_t n = gen::below(7);
      REQUIRE(g_eval(fam, n, TritWord(a)).str() == g_ref(n, a));
    }
  }

  TEST_CASE("composition laws") {
    std::mt19937_64 rng(11);
    CHECK(composition_law_check(fam, 0, 1, 256, 100, rng).pass());
    CHECK(composition_law_check(fam, 1, 3, 256, 100, rng).pass());
    CHECK_THROWS(composition_law_check(fam, 2, 2, 256, 10, rng));
    CHECK(triple_law_check(fam, 0, 2, 1, 256, 50, rng).pass());
    const auto r = composition_law_check(fam, 0, 2, 256, 20, rng);
    CHECK(r.determined_positions > 0);
  }

  TEST_CASE("composition law against the direct formula") {
    for (std::uint64_t m = 0; m < 4; ++m)
      for (std::uint64_t n = m + 1; n <= 4; ++n)
        for (int i = 0; i < 20; ++i) {
          const auto a = gen::bits(128);
          const auto lhs = g_ref(m, g_ref(n, a)), rhs = g_ref(m, a);
          for (std::size_t k = 0; k < a.size(); ++k)
            if (lhs[k] != '?' && rhs[k] != '?') REQUIRE(lhs[k] == rhs[k]);
        }
  }

  TEST_CASE("cylinder stability") {
    std::mt19937_64 rng(3);
    CHECK(cylinder_stability_check(fam, 2, Word("101"), 256, 100, rng).pass);
    CHECK(cylinder_stability_check(fam, 0, Word(""), 256, 100, rng).pass);
    CHECK_THROWS(cylinder_stability_check(fam, 0, Word("1"), 256, 10, rng));
  }
}

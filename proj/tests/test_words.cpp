#include "doctest.h"
#include "oracles.hpp"

#include "cantor/point.hpp"
#include "cantor/words.hpp"

using namespace cantor;

TEST_SUITE("words") {
  TEST_CASE("psi first values") {
    const char* expected[] = {"", "0", "1", "00", "01", "10", "11"};
    for (std::uint64_t n = 0; n < 7; ++n) CHECK(psi(n).str() == expected[n]);
    CHECK(psi(7).str() == "000");
  }

  TEST_CASE("psi agrees with the enumeration oracle") {
    const auto words = oracle::enumerate_words(10);
    for (std::size_t n = 0; n < words.size(); ++n) {
      REQUIRE(psi(n).str() == words[n]);
      REQUIRE(psi_inv(Word(words[n])) == n);
    }
  }

  TEST_CASE("dense sequence") {
    CHECK(dense_seq(0).str() == "");
    CHECK(dense_seq(4).str() == "0100");
    CHECK(dense_seq(6).str() == "110000");
    for (std::uint64_t n = 0; n < 300; ++n) REQUIRE(dense_seq(n).str() == oracle::dense(n));
  }

  TEST_CASE("density witness") {
    CHECK(density_witness(Word("11")) == 6);
    CHECK(density_witness(Word("")) == 0);
    CHECK(density_witness(Word("0")) == 1);
    for (const auto& w : oracle::enumerate_words(7)) {
      const std::uint64_t n = density_witness(Word(w));
      REQUIRE(n == oracle::psi_index(w));
      REQUIRE(oracle::dense(n).compare(0, w.size(), w) == 0);
    }
  }

  TEST_CASE("card") {
    CHECK(card(Word("0100")) == 1);
    CHECK(card(Word("")) == 0);
    CHECK(card(Word("110000")) == 2);
  }

  TEST_CASE("factor occurrence") {
    CHECK(factor_occurs(Word("01"), Word("001")) == std::optional<std::size_t>{1});
    CHECK(factor_occurs(Word(""), Word("0110")) == std::optional<std::size_t>{0});
    CHECK_FALSE(factor_occurs(Word("11"), Word("0100")));
  }

  TEST_CASE("factor occurrence against slide-and-match, random") {
    for (int i = 0; i < 2000; ++i) {
      const auto s = gen::bits(gen::below(6));
      const auto t = gen::bits(gen::below(30));
      const auto occ = oracle::occurrences(s, t);
      const auto got = factor_occurs(Word(s), Word(t));
      REQUIRE(got.has_value() == !occ.empty());
      if (got) REQUIRE(*got == occ.front());
      REQUIRE(count_occurrences(Word(s), Word(t)) == occ.size());
    }
  }

  TEST_CASE("reversal and symmetry") {
    CHECK(reversed(Word("0011")).str() == "1100");
    CHECK(is_symmetric(Word("0110")));
    CHECK_FALSE(is_symmetric(Word("01")));
    CHECK(is_symmetric(Word("")));
  }

  TEST_CASE("word basics") {
    CHECK_THROWS_AS(Word("012"), std::invalid_argument);
    CHECK(Word("01") < Word("1"));
    CHECK(Word("0") < Word("00"));
    CHECK(Word("01").is_prefix_of(Word("011")));
    CHECK(common_prefix(Word("0110"), Word("0101")) == 2);
    CHECK(Word::from_binary(5, 4).str() == "0101");
    CHECK(words_of_length(3).size() == 8);
  }
}

TEST_SUITE("points") {
  TEST_CASE("canonical form makes equality semantic") {
    CHECK(DescribedPoint::parse("0|0") == DescribedPoint::parse("|0"));
    CHECK(DescribedPoint::parse("01|01") == DescribedPoint::parse("|01"));
    CHECK(DescribedPoint::parse("|0101") == DescribedPoint::parse("0|10"));
    CHECK(DescribedPoint::parse("11") == DescribedPoint::parse("11|0"));
    CHECK_FALSE(DescribedPoint::parse("1|0") == DescribedPoint::parse("|1"));
  }

  TEST_CASE("bits, drops and comparisons against the oracle, random") {
    for (int i = 0; i < 1000; ++i) {
      const auto a = gen::point(5, 4), b = gen::point(5, 4);
      const DescribedPoint pa(Word(a.pre), Word(a.period)), pb(Word(b.pre), Word(b.period));
      const std::size_t window = 64;
      REQUIRE(pa.prefix(window).str() == a.prefix(window));
      const std::size_t k = gen::below(8);
      REQUIRE(pa.drop(k).prefix(window).str() == a.prefix(window + k).substr(k));
      const auto wa = a.prefix(window), wb = b.prefix(window);
      REQUIRE((pa == pb) == (wa == wb));
      REQUIRE(lex_less(pa, pb) == (wa < wb));
      if (wa != wb) {
        std::size_t d = 0;
        while (wa[d] == wb[d]) ++d;
        REQUIRE(first_difference(pa, pb) == std::optional<std::size_t>{d});
      }
    }
  }
}

#include "doctest.h"
#include "oracles.hpp"

#include "cantor/synthesizer.hpp"

using namespace cantor;

namespace {

SynthesisInstance as_instance(SSpec s, const char* b, std::size_t d) {
  SynthesisInstance inst;
  inst.family = FamilyKind::AS;
  inst.s = std::move(s);
  inst.restriction = Cylinder{Word(b)};
  inst.depth = d;
  return inst;
}

SynthesisInstance a1_instance(const char* b, std::size_t d) {
  SynthesisInstance inst;
  inst.family = FamilyKind::A1;
  inst.restriction = Cylinder{Word(b)};
  inst.depth = d;
  return inst;
}

std::vector<std::uint64_t> range_from(std::uint64_t start, std::size_t n) {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(start + i);
  return v;
}

}  // namespace

TEST_SUITE("synthesizer") {
  TEST_CASE("identity table on the whole space") {
    const auto inst = as_instance(SSpec::omega(), "", 2);
    const auto r = synthesize(inst);
    REQUIRE(r.status == Outcome::Pass);
    for (const auto& [s, a] : r.table.u) CHECK(a == s);
    CHECK(r.table.phi == range_from(0, 2));
    CHECK(r.table.theta == std::vector<std::uint64_t>{0, 0});
    CHECK(verify_table(inst, r.table).ok());
    CHECK(extract_u(r.table, Word("01")).str() == "01");
  }

  TEST_CASE("tables restricted to a cylinder") {
    const auto inst = as_instance(SSpec::omega(), "1", 2);
    const auto r = synthesize(inst);
    REQUIRE(r.status == Outcome::Pass);
    for (const auto& [s, a] : r.table.u) CHECK(a == Word("1") + s);
    CHECK(r.table.phi == range_from(1, 2));
    CHECK(r.table.theta == std::vector<std::uint64_t>{1, 1});
    CHECK(extract_u(r.table, Word("01")).str() == "101");

    const auto inst2 = as_instance(SSpec::modular(2, {}), "11", 2);
    const auto r2 = synthesize(inst2);
    REQUIRE(r2.status == Outcome::Pass);
    for (const auto& [s, a] : r2.table.u) CHECK(a == Word("11") + s);
    CHECK(r2.table.phi == range_from(2, 2));
    CHECK(r2.table.theta == std::vector<std::uint64_t>{2, 2});
  }

  TEST_CASE("round trip over a small instance matrix") {
    const std::vector<SSpec> specs = {SSpec::omega(), SSpec::modular(2, {}), SSpec::modular(3, {1}),
                                      SSpec::louveau(AlphaSpec::parse("|0"))};
    for (const auto& s : specs)
      for (const char* b : {"", "1", "11"})
        for (std::size_t d = 0; d <= 4; ++d) {
          const auto inst = as_instance(s, b, d);
          const auto r = synthesize(inst);
          INFO(inst.describe());
          REQUIRE(r.status == Outcome::Pass);
          REQUIRE(verify_table(inst, r.table).ok());
          // Prefix containment and the restriction, rechecked on the raw map.
          for (const auto& [w, a] : r.table.u) {
            REQUIRE(Word(b).is_prefix_of(a));
            if (!w.empty()) REQUIRE(r.table.u.at(w.prefix(w.size() - 1)).is_prefix_of(a));
          }
        }
    for (const char* b : {"", "0"})
      for (std::size_t d = 0; d <= 4; ++d) {
        const auto inst = a1_instance(b, d);
        const auto r = synthesize(inst);
        REQUIRE(r.status == Outcome::Pass);
        REQUIRE(verify_table(inst, r.table).ok());
      }
  }

  TEST_CASE("synthesis is deterministic") {
    const auto inst = as_instance(SSpec::modular(3, {1}), "1", 4);
    CHECK(table_digest(synthesize(inst).table) == table_digest(synthesize(inst).table));
  }

  TEST_CASE("corrupted tables are rejected") {
    const auto inst = as_instance(SSpec::omega(), "", 3);
    const auto good = synthesize(inst).table;
    REQUIRE(verify_table(inst, good).ok());

    auto bad = good;
    bad.u[Word("1")] = Word("11");
    const auto rep = verify_table(inst, bad);
    CHECK_FALSE(rep.ok());
    bool saw_iii = false;
    for (const auto& v : rep.violations) saw_iii = saw_iii || v.condition == "iii";
    CHECK(saw_iii);

    bad = good;
    bad.phi[2] = bad.phi[1];
    const auto pre = verify_table(inst, bad);
    CHECK_FALSE(pre.precondition_ok);
    CHECK(pre.pairs_checked == 0);

    bad = good;
    bad.theta[1] += 1;
    CHECK_FALSE(verify_table(inst, bad).ok());

    bad = good;
    bad.u.erase(Word("010"));
    CHECK_FALSE(verify_table(inst, bad).precondition_ok);
  }

  TEST_CASE("extraction") {
    const auto r = synthesize(a1_instance("", 3));
    for (const auto& w : oracle::all_of_length(3)) {
      const Word u = extract_u(r.table, Word(w));
      CHECK(u == r.table.u.at(Word(w)));
    }
    CHECK_THROWS_AS(extract_u(r.table, Word("0101")), std::out_of_range);
  }

  TEST_CASE("least dense extension") {
    CHECK(least_dense_extension(Word("11"), 0) == std::optional<std::uint64_t>{6});
    CHECK(least_dense_extension(Word(""), 3) == std::optional<std::uint64_t>{3});
    for (const auto& c : oracle::enumerate_words(5))
      for (std::uint64_t lower = 0; lower < 12; ++lower) {
        std::uint64_t n = lower;
        while (oracle::dense(n).compare(0, c.size(), c) != 0 || oracle::dense(n).size() < c.size()) ++n;
        REQUIRE(least_dense_extension(Word(c), lower) == std::optional<std::uint64_t>{n});
      }
  }
}

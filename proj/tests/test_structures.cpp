#include <ostream>

#include "doctest.h"
#include "oracles.hpp"

#include "cantor/structures.hpp"

using namespace cantor;

namespace {

oracle::Rel to_rel(const FiniteRelation& r) {
  oracle::Rel out;
  for (auto [x, y] : r.pairs()) out.insert({static_cast<int>(x), static_cast<int>(y)});
  return out;
}

// The four constructions on the doubled set, restated pair by pair.
oracle::Rel reference(TransformKind kind, const oracle::Rel& a, int n) {
  oracle::Rel out;
  const bool loops = kind == TransformKind::R || kind == TransformKind::S;
  const bool sym = kind == TransformKind::S || kind == TransformKind::SPrime;
  if (loops)
    for (int x = 0; x < 2 * n; ++x) out.insert({x, x});
  for (auto [x, y] : a) {
    out.insert({2 * x, 2 * y + 1});
    if (sym) out.insert({2 * y + 1, 2 * x});
  }
  return out;
}

Profile profile_of(std::initializer_list<int> bits) {
  Profile p;
  for (int b : bits) p.set(static_cast<std::size_t>(b));
  return p;
}

}  // namespace

TEST_SUITE("structures") {
  TEST_CASE("transform examples") {
    const FiniteRelation a(2, {{0, 1}});
    const auto r = transform(TransformKind::R, a);
    CHECK(r.count() == 5);
    CHECK(r.has(doubled(0, 0), doubled(1, 1)));
    CHECK(transform(TransformKind::RPrime, FiniteRelation(2)).empty());
    const auto sp = transform(TransformKind::SPrime, a);
    CHECK(sp.count() == 2);
    CHECK(sp.has(doubled(0, 0), doubled(1, 1)));
    CHECK(sp.has(doubled(1, 1), doubled(0, 0)));
    CHECK(parse_transform("rp") == TransformKind::RPrime);
    CHECK_THROWS(parse_transform("q"));
  }

  TEST_CASE("transforms against the pairwise construction, all relations on 3 points") {
    for (std::uint64_t mask = 0; mask < (1U << 9); ++mask) {
      const auto a = FiniteRelation::from_mask(3, mask);
      for (auto kind : {TransformKind::R, TransformKind::RPrime, TransformKind::S, TransformKind::SPrime})
        REQUIRE(to_rel(transform(kind, a)) == reference(kind, to_rel(a), 3));
    }
  }

  TEST_CASE("property profiles") {
    FiniteRelation id(3, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(check_properties(id) == profile_of({0, 2, 3, 4}));
    FiniteRelation lt(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(check_properties(lt) == profile_of({1, 3, 4}));
    FiniteRelation full(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(check_properties(full) == profile_of({0, 2, 4}));
  }

  TEST_CASE("property profiles against the oracle, all relations on 3 points") {
    for (std::uint64_t mask = 0; mask < (1U << 9); ++mask) {
      const auto a = FiniteRelation::from_mask(3, mask);
      const auto r = to_rel(a);
      const Profile p = check_properties(a);
      REQUIRE(p[0] == oracle::reflexive(r, 3));
      REQUIRE(p[1] == oracle::irreflexive(r));
      REQUIRE(p[2] == oracle::symmetric(r));
      REQUIRE(p[3] == oracle::antisymmetric(r));
      REQUIRE(p[4] == oracle::transitive(r));
    }
  }

  TEST_CASE("sigma classification") {
    CHECK(classify_sigma(profile_of({0, 1})) == SigmaVerdict::EmptyClass);
    CHECK(classify_sigma(profile_of({2, 3})) == SigmaVerdict::DiagonalOnly);
    CHECK(classify_sigma(profile_of({3, 4})) == SigmaVerdict::Admissible);
    CHECK(classify_sigma(profile_of({1, 2, 4})) == SigmaVerdict::EmptyClass);
    CHECK(classify_sigma(profile_of({0, 2, 4})) == SigmaVerdict::EquivalenceReducible);
    // A nonempty non-diagonal witness for {3, 4}.
    const FiniteRelation w(2, {{0, 1}});
    const Profile p = check_properties(w);
    CHECK(p[3]);
    CHECK(p[4]);
  }

  TEST_CASE("empty and diagonal verdicts are confirmed by enumeration") {
    for (unsigned bits = 0; bits < 32; ++bits) {
      const Profile sigma(bits);
      const auto v = classify_sigma(sigma);
      if (v == SigmaVerdict::EmptyClass) CHECK(confirm_empty(sigma));
      if (v == SigmaVerdict::DiagonalOnly) CHECK(confirm_diagonal(sigma));
      if (v == SigmaVerdict::Admissible) CHECK_FALSE(confirm_diagonal(sigma));
    }
  }

  TEST_CASE("relation storage") {
    FiniteRelation r(2);
    CHECK_THROWS_AS(r.add(2, 0), std::out_of_range);
    r.add(1, 0);
    CHECK(r.has(1, 0));
    CHECK(FiniteRelation::from_mask(2, 0b0100) == r);
  }
}

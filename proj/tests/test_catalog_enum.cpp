#include "doctest.h"
#include "monoidkit/catalog.hpp"
#include "monoidkit/monoid.hpp"
#include "monoidkit/relations.hpp"
#include "support/oracles.hpp"

namespace mk = monoidkit;

TEST_CASE("every catalog entry is a valid monoid with the advertised order") {
  for (const auto& e : mk::catalog_entries()) {
    CAPTURE(e.name);
    const mk::FiniteMonoid m = e.build();
    CHECK_FALSE(mk::validate(m).has_value());
    CHECK(m.order() >= 1);
    CHECK(mk::catalog_get(e.name) == m);
  }
  CHECK_THROWS_AS(mk::catalog_get("nonsense"), mk::ValidationError);
}

TEST_CASE("catalog orders and structure spot checks") {
  CHECK(mk::catalog_get("trivial").order() == 1);
  CHECK(mk::catalog_get("S3").order() == 6);
  CHECK(mk::catalog_get("diamond").order() == 5);
  CHECK(mk::catalog_get("dstack1").order() == 9);
  CHECK(mk::catalog_get("fountainZ2").order() == 8);
  CHECK(mk::catalog_get("psl1").order() == 6);
  CHECK(mk::catalog_get("psl2").order() == 20);

  // fountain layout: G, xG, x^2 G, x^3, x^4
  const mk::FiniteMonoid f = mk::catalog_get("fountainZ2");
  CHECK(f.at(2, 2) == 4);   // x * x = x^2
  CHECK(f.at(2, 4) == 6);   // x * x^2 = x^3
  CHECK(f.at(4, 4) == 7);   // x^2 * x^2 = x^4
  CHECK(f.at(6, 2) == 7);   // x^3 * x = x^4
  CHECK(f.at(6, 1) == 6);   // x^3 * g = x^3
  CHECK(f.at(7, 6) == 7);   // x^4 absorbs
  CHECK(f.at(2, 5) == 6);   // x * x^2 g = x^3

  // semilattices really are semilattices
  for (const char* name : {"chain5", "diamond", "dstack2", "psl1"}) {
    const mk::FiniteMonoid m = mk::catalog_get(name);
    CAPTURE(name);
    CHECK_FALSE(mk::semilattice_violation(m, mk::idempotents(m)).has_value());
    CHECK(mk::idempotents(m).count() == m.order());
  }
}

TEST_CASE("enumeration matches the brute-force oracle up to isomorphism") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fast = mk::enumerate_monoids(n);
    const auto slow = mk::oracle::brute_force_monoids(n);
    CAPTURE(n);
    REQUIRE(fast.size() == slow.size());
    for (const auto& s : slow) {
      bool matched = false;
      for (const auto& f : fast) matched = matched || mk::isomorphic(f, s);
      CHECK(matched);
    }
  }
  // frozen counts
  CHECK(mk::enumerate_monoids(1).size() == 1);
  CHECK(mk::enumerate_monoids(2).size() == 2);
  CHECK(mk::enumerate_monoids(3).size() == 7);
}

TEST_CASE("enumeration limit and order-4 count") {
  CHECK(mk::enumerate_monoids(4, 5).size() == 5);
  CHECK(mk::enumerate_monoids(4).size() == 35);  // frozen fixture
}

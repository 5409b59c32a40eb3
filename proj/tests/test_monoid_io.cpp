#include <sstream>

#include "doctest.h"
#include "monoidkit/catalog.hpp"
#include "monoidkit/io.hpp"
#include "monoidkit/monoid.hpp"

namespace mk = monoidkit;

TEST_CASE("validate accepts groups and rejects broken tables") {
  CHECK_FALSE(mk::validate(mk::make_cyclic_group(4)).has_value());
  CHECK_FALSE(mk::validate(mk::make_symmetric_group3()).has_value());

  // non-associative: (1*2)*2 = 1 but 1*(2*2) = 2
  mk::FiniteMonoid bad(3, {0, 1, 2, 1, 2, 2, 2, 2, 1});
  CHECK(mk::validate(bad).has_value());

  // identity row broken
  mk::FiniteMonoid noid(2, {0, 0, 0, 0});
  CHECK(mk::validate(noid).has_value());
}

TEST_CASE("adjoin_identity shifts a semigroup up by one") {
  // right-zero semigroup on two elements
  const mk::FiniteMonoid m = mk::adjoin_identity(2, {0, 1, 0, 1}, {"r0", "r1"});
  CHECK(m.order() == 3);
  CHECK_FALSE(mk::validate(m).has_value());
  CHECK(m.at(1, 2) == 2);
  CHECK(m.at(2, 1) == 1);
  CHECK(m.label(0) == "1");
  CHECK(m.label(1) == "r0");
}

TEST_CASE("isomorphic detects relabelled copies and rejects different monoids") {
  const mk::FiniteMonoid z4 = mk::make_cyclic_group(4);
  // Z4 with elements 1 and 2 transposed
  mk::FiniteMonoid z4b(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1});
  REQUIRE_FALSE(mk::validate(z4b).has_value());
  CHECK(mk::isomorphic(z4, z4b));
  const mk::FiniteMonoid v4 =
      mk::direct_product(mk::make_cyclic_group(2), mk::make_cyclic_group(2));
  CHECK_FALSE(mk::isomorphic(z4, v4));
  CHECK(mk::canonical_form(z4) == mk::canonical_form(z4b));
}

TEST_CASE("text round-trip preserves the table and labels") {
  for (const char* name : {"Z3", "chain4", "fountainZ2", "diamond"}) {
    const mk::FiniteMonoid m = mk::catalog_get(name);
    const mk::FiniteMonoid back = mk::parse_monoid_text(mk::write_monoid_text(m));
    CHECK(back == m);
    CHECK(back.labels() == m.labels());
  }
}

TEST_CASE("json round-trip preserves the table") {
  const mk::FiniteMonoid m = mk::catalog_get("S3");
  CHECK(mk::monoid_from_json(mk::monoid_to_json(m)) == m);
}

TEST_CASE("parse errors throw ValidationError") {
  CHECK_THROWS_AS(mk::parse_monoid_text("n=2\n0 1\n"), mk::ValidationError);
  CHECK_THROWS_AS(mk::parse_monoid_text("n=2\n0 1\n1 2\n"), mk::ValidationError);
  // valid table but no identity at index 0
  CHECK_THROWS_AS(mk::parse_monoid_text("n=2\n1 1\n1 1\n"), mk::ValidationError);
}

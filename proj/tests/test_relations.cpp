#include "doctest.h"
#include "monoidkit/catalog.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/relations.hpp"

namespace mk = monoidkit;

TEST_CASE("Green's relations on a group are universal, on a semilattice trivial") {
  const mk::FiniteMonoid z3 = mk::make_cyclic_group(3);
  const auto g = mk::greens_relations(z3);
  CHECK(g.R.is_universal());
  CHECK(g.L.is_universal());

  const mk::FiniteMonoid c4 = mk::make_chain_semilattice(4);
  const auto h = mk::greens_relations(c4);
  CHECK(h.R.is_identity());
  CHECK(h.L.is_identity());
}

TEST_CASE("star relations contain Green's relations") {
  for (const char* name : {"fountainZ2", "diamond", "rz1", "lz1", "S3"}) {
    const mk::FiniteMonoid m = mk::catalog_get(name);
    CAPTURE(name);
    const auto g = mk::greens_relations(m);
    CHECK(g.L.refines(mk::relation_Lstar(m)));
    CHECK(g.R.refines(mk::relation_Rstar(m)));
  }
}

TEST_CASE("annihilator congruences are one-sided congruences") {
  const mk::FiniteMonoid m = mk::catalog_get("fountainZ2");
  for (mk::Elem a = 0; a < m.order(); ++a) {
    CHECK(mk::is_congruence(m, mk::right_annihilator(m, a), mk::Side::Right));
    CHECK(mk::is_congruence(m, mk::left_annihilator(m, a), mk::Side::Left));
  }
}

TEST_CASE("tilde relations with E = E(M) coarsen the star relations") {
  for (const char* name : {"fountainZ2", "chain4", "Z4", "rz1", "lz1"}) {
    const mk::FiniteMonoid m = mk::catalog_get(name);
    CAPTURE(name);
    const mk::ElemSet E = mk::idempotents(m);
    CHECK(mk::relation_Lstar(m).refines(mk::relation_Ltilde(m, E)));
    CHECK(mk::relation_Rstar(m).refines(mk::relation_Rtilde(m, E)));
  }
}

TEST_CASE("classification of well-known monoids") {
  const auto z4 = mk::classify(mk::make_cyclic_group(4));
  CHECK(z4.group);
  CHECK(z4.regular);
  CHECK(z4.inverse);

  const auto c3 = mk::classify(mk::make_chain_semilattice(3));
  CHECK_FALSE(c3.group);
  CHECK(c3.regular);
  CHECK(c3.inverse);  // commutative + regular + idempotent
  CHECK(c3.left_abundant);
  CHECK(c3.right_abundant);

  const auto f = mk::classify(mk::catalog_get("fountainZ2"));
  CHECK_FALSE(f.regular);
  CHECK(f.right_fountain);
  CHECK(f.left_fountain);
}

TEST_CASE("sigma congruence collapses exactly the E-generated pairs") {
  const mk::FiniteMonoid m = mk::make_chain_semilattice(3);
  const auto sigma = mk::sigma_congruence(m, mk::idempotents(m));
  CHECK(sigma.is_universal());  // all of M is idempotent

  const mk::FiniteMonoid z2 = mk::make_cyclic_group(2);
  CHECK(mk::sigma_congruence(z2, mk::idempotents(z2)).is_identity());
}

TEST_CASE("hat_set contains exactly the idempotent stabilizers") {
  const mk::FiniteMonoid m = mk::catalog_get("diamond");
  mk::ElemSet A(m.order());
  A.set(1);  // the top of the diamond, below the adjoined identity
  const mk::ElemSet hat = mk::hat_set(m, A);
  hat.for_each([&](mk::Elem e) {
    CHECK(m.at(e, e) == e);
    A.for_each([&](mk::Elem x) { CHECK(A.test(m.at(e, x))); });
  });
  CHECK(hat.test(0));
}

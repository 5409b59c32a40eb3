#include "doctest.h"
#include "monoidkit/catalog.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/relations.hpp"

namespace mk = monoidkit;

TEST_CASE("S(M) has order 2^n * n with identity (0,1)") {
  const mk::FiniteMonoid z2 = mk::make_cyclic_group(2);
  const mk::SView sv(z2);
  CHECK(sv.order() == 8);
  CHECK(sv.identity() == sv.encode(0, 0));
  // ( {1}, g ) * ( {g}, g ) = ( {1} u g{g}, g^2 ) = ( {1}, 1 )
  const mk::Elem x = sv.encode(0b01, 1), y = sv.encode(0b10, 1);
  CHECK(sv.product(x, y) == sv.encode(0b01, 0));
  CHECK_FALSE(mk::find_view_violation(sv, 4096, 0, 1).has_value());
}

TEST_CASE("the retraction onto M splits the embedding") {
  for (const char* name : {"Z3", "chain3", "fountainZ2"}) {
    const mk::FiniteMonoid m = mk::catalog_get(name);
    CAPTURE(name);
    const mk::SView sv(m);
    CHECK_NOTHROW(mk::check_retraction(sv, 1u << 23));
    const mk::Retraction r = mk::retraction(sv);
    for (mk::Elem s = 0; s < sv.order(); ++s)
      CHECK(r.retract(s) == sv.decode(s).elem);
  }
}

TEST_CASE("materialize produces a valid table and respects its cap") {
  const mk::SView sv(mk::make_cyclic_group(3));
  const mk::FiniteMonoid big = mk::materialize(sv);
  CHECK(big.order() == 24);
  CHECK_FALSE(mk::validate(big).has_value());
  for (mk::Elem a = 0; a < sv.order(); ++a)
    for (mk::Elem b = 0; b < sv.order(); ++b)
      CHECK(big.at(a, b) == sv.product(a, b));
  CHECK_THROWS_AS(mk::materialize(mk::SView(mk::make_chain_semilattice(5)), 10),
                  mk::CapacityError);
}

TEST_CASE("SView rejects bases over the bit cap") {
  std::vector<mk::Elem> t(25 * 25);
  for (mk::Elem i = 0; i < 25; ++i)
    for (mk::Elem j = 0; j < 25; ++j) t[i * 25 + j] = std::min(std::max(i, j), 24u);
  const mk::FiniteMonoid chain25(25, t);
  REQUIRE_FALSE(mk::validate(chain25).has_value());
  CHECK_THROWS_AS(mk::SView{chain25}, mk::CapacityError);
}

TEST_CASE("Sz(M) is the sub-monoid of pairs with 1, a in A") {
  const mk::FiniteMonoid z2 = mk::make_cyclic_group(2);
  const mk::SzView szv(z2);
  // subsets containing 1 and a: a=1 -> {1},{1,g}; a=g -> {1,g}. Order 3.
  CHECK(szv.order() == 3);
  CHECK(szv.identity() == 0);
  const auto up = [&](mk::Elem x) { return szv.ambient().encode(szv.decode(x)); };
  for (mk::Elem a = 0; a < szv.order(); ++a) {
    const mk::SElem d = szv.decode(a);
    CHECK(bool(d.subset >> 0 & 1));       // 1 in A
    CHECK(bool(d.subset >> d.elem & 1));  // a in A
    CHECK(szv.from_ambient(up(a)) == a);
    for (mk::Elem b = 0; b < szv.order(); ++b)
      CHECK(up(szv.product(a, b)) == szv.ambient().product(up(a), up(b)));
  }
}

TEST_CASE("idempotents of S(M) project to stabilizing idempotents") {
  const mk::FiniteMonoid m = mk::catalog_get("diamond");
  const mk::SView sv(m);
  mk::idempotents(sv).for_each([&](mk::Elem s) {
    const mk::SElem d = sv.decode(s);
    CHECK(m.at(d.elem, d.elem) == d.elem);
    CHECK((sv.act(d.elem, d.subset) & ~d.subset) == 0);
  });
}

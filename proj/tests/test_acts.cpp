#include <random>

#include "doctest.h"
#include "monoidkit/acts.hpp"
#include "monoidkit/catalog.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/relations.hpp"
#include "support/oracles.hpp"

namespace mk = monoidkit;

TEST_CASE("congruence closure matches the naive fixpoint oracle") {
  std::mt19937_64 rng(7);
  for (const char* name : {"Z4", "chain4", "fountainZ2", "diamond", "rz1"}) {
    const mk::FiniteMonoid m = mk::catalog_get(name);
    CAPTURE(name);
    std::uniform_int_distribution<mk::Elem> el(0, mk::Elem(m.order() - 1));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<mk::ElemPair> w;
      for (int i = 0, sz = 1 + int(rng() % 3); i < sz; ++i)
        w.push_back({el(rng), el(rng)});
      for (auto kind : {mk::RelKind::RightCongruence, mk::RelKind::LeftCongruence}) {
        CHECK(mk::congruence_closure(m, w, kind) ==
              mk::oracle::naive_congruence_closure(m, w, kind));
      }
    }
  }
}

TEST_CASE("w-sequence witnesses exist exactly for related pairs and replay") {
  const mk::FiniteMonoid m = mk::catalog_get("fountainZ2");
  const std::vector<mk::ElemPair> w{{2, 3}, {6, 7}};
  for (mk::Side side : {mk::Side::Right, mk::Side::Left}) {
    const auto kind = side == mk::Side::Right ? mk::RelKind::RightCongruence
                                              : mk::RelKind::LeftCongruence;
    const mk::EqRelation cl = mk::congruence_closure(m, w, kind);
    for (mk::Elem x = 0; x < m.order(); ++x)
      for (mk::Elem y = 0; y < m.order(); ++y) {
        const auto ws = mk::find_w_sequence(m, w, side, x, y);
        CHECK(ws.has_value() == cl.same(x, y));
        if (ws) {
          CHECK(mk::replay_w_sequence(m, w, *ws));
          CHECK(mk::skeleton(*ws).size() == ws->steps.size());
        }
      }
  }
}

TEST_CASE("replay rejects forged sequences") {
  const mk::FiniteMonoid m = mk::make_cyclic_group(4);
  const std::vector<mk::ElemPair> w{{0, 2}};
  mk::WSequence forged{1, 2, mk::Side::Right, {{0, 2, 1}}};  // 0*1=1 but 2*1=2 != 2? yes ends at 2
  // the true endpoint of the step is 2, but the claimed pair is (1, 2): ok;
  // now forge the generator pair
  forged.steps[0] = {1, 2, 0};  // (1,2) is not in W
  CHECK_FALSE(mk::replay_w_sequence(m, w, forged));
}

TEST_CASE("principal ideals and generators of ideals") {
  const mk::FiniteMonoid m = mk::make_chain_semilattice(4);
  const mk::IdealSet i1 = mk::principal_ideal(m, 1, mk::Side::Right);
  CHECK(i1.carrier.to_mask() == 0b1110);
  const auto gens = mk::ideal_generators(m, i1.carrier, mk::Side::Right);
  CHECK(gens == std::vector<mk::Elem>{1});

  // union of two incomparable principal ideals in the diamond
  const mk::FiniteMonoid d = mk::catalog_get("diamond");
  const mk::IdealSet ie = mk::principal_ideal(d, 2, mk::Side::Right);
  const mk::IdealSet iff = mk::principal_ideal(d, 3, mk::Side::Right);
  const auto g2 = mk::ideal_generators(d, ie.carrier | iff.carrier, mk::Side::Right);
  CHECK(g2.size() == 2);
}

TEST_CASE("subact generators: R((M,1),(M,1)) in S(U2) is finitely generated") {
  const mk::FiniteMonoid m = mk::catalog_get("U2");
  const mk::SView sv(m);
  const mk::Elem m1 = sv.encode(0b11, 0);
  const mk::PairSet r = mk::subact_RL(sv, m1, m1, mk::Side::Right);
  for (const auto& pr : r.pairs)
    CHECK(sv.product(m1, pr.first) == sv.product(m1, pr.second));
  const auto gens = mk::subact_generators(sv, r, mk::Side::Right);
  // every pair divisible from some generator
  for (const auto& pr : r.pairs) {
    bool hit = false;
    for (const auto& g : gens)
      hit = hit || mk::subact_divides(sv, g, pr, mk::Side::Right);
    CHECK(hit);
  }
  CHECK(mk::subact_min_generators(sv, r, mk::Side::Right) <= gens.size());
}

TEST_CASE("min_generators_congruence finds exact small bases") {
  const mk::FiniteMonoid m = mk::catalog_get("fountainZ2");
  // r(x^4) is generated by the single pair (1, x^4)
  const auto mg = mk::min_generators_congruence(m, mk::right_annihilator(m, 7),
                                                mk::Side::Right);
  CHECK(mg.exact);
  CHECK(mg.lower == 1);
  CHECK(mg.upper == 1);
  CHECK(mk::congruence_closure(m, mg.generators, mk::RelKind::RightCongruence) ==
        mk::right_annihilator(m, 7));

  const auto id = mk::min_generators_congruence(
      m, mk::EqRelation::identity(m.order(), mk::RelKind::RightCongruence),
      mk::Side::Right);
  CHECK(id.exact);
  CHECK(id.upper == 0);
}

TEST_CASE("s_divides matches brute-force divisibility in S(M)") {
  const mk::FiniteMonoid m = mk::catalog_get("rz1");
  const mk::SView sv(m);
  for (mk::Elem x = 0; x < sv.order(); ++x)
    for (mk::Elem y = 0; y < sv.order(); ++y)
      for (mk::Side side : {mk::Side::Right, mk::Side::Left}) {
        bool brute = false;
        for (mk::Elem t = 0; t < sv.order(); ++t)
          brute = brute || (side == mk::Side::Right ? sv.product(x, t)
                                                    : sv.product(t, x)) == y;
        CHECK(mk::s_divides(sv, x, y, side) == brute);
      }
}

// The OpenMP kernels must agree with the serial reference loops.
#include "doctest.h"
#include "monoidkit/catalog.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/kernels.hpp"

namespace mk = monoidkit;

namespace {

void check_agreement(const mk::MonoidView& v) {
  for (mk::Side side : {mk::Side::Right, mk::Side::Left}) {
    CHECK(mk::ideal_masks(v, side) == mk::ref::ideal_masks(v, side));
    CHECK(mk::star_partition(v, side) == mk::ref::star_partition(v, side));
  }
  CHECK(mk::idempotent_set(v) == mk::ref::idempotent_set(v));
  // witnesses may differ elementwise; existence must agree
  const auto a = mk::regular_witnesses(v), b = mk::ref::regular_witnesses(v);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK((a[i] == mk::kNoElem) == (b[i] == mk::kNoElem));
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference on the catalog") {
  for (const auto& e : mk::catalog_entries()) {
    const mk::FiniteMonoid m = e.build();
    CAPTURE(e.name);
    check_agreement(m);
    if (m.order() <= 6) check_agreement(mk::SView(m));
  }
}

TEST_CASE("kernel outputs are correct on a hand-checked example") {
  const mk::FiniteMonoid m = mk::make_chain_semilattice(3);  // T > t1 > bot
  const auto right = mk::ideal_masks(m, mk::Side::Right);
  CHECK(right[0].to_mask() == 0b111);  // 1M = M
  CHECK(right[1].to_mask() == 0b110);  // t1 M = {t1, bot}
  CHECK(right[2].to_mask() == 0b100);  // bot M = {bot}
  CHECK(mk::idempotent_set(m).count() == 3);
}

#include <set>

#include "doctest.h"
#include "json.hpp"
#include "monoidkit/catalog.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/relations.hpp"
#include "monoidkit/verifier.hpp"

namespace mk = monoidkit;

TEST_CASE("the manifest covers every in-scope claim") {
  // one check per claim the library is documented to verify
  static const char* required_anchors[] = {
      "lem:Sreg(1)",  "lem:Sreg(2)",  "prop:Rrel(1)", "prop:Rrel(2)",
      "prop:Rrel(3)", "prop:Rrel(4)", "prop:Rrel(5)", "prop:Rrel(6)",
      "prop:Lrel(1)", "prop:Lrel(2)", "prop:Lrel(3)", "prop:Lrel(4)",
      "prop:Lrel(5)", "prop:Lrel(6)", "prop:Lrel(7)", "rem:inclusions",
      "prop:finite",  "thm:srih",     "def:srih",     "prop:leftcoord",
      "rem:leftcoordcancel", "rem:leftcoord(2)", "lem:FRErabund",
      "prop:rcanc",   "Fountain example", "lem:FREobstruct", "rem:easyseq",
      "chain example", "ex:notstrongleft", "ex:labund", "cor:LCM",
      "qn:skeletons", "prop:gen", "thm:weakcoherent", "§2.2",
  };
  const auto& defs = mk::check_manifest();
  std::set<std::string> ids;
  for (const auto& d : defs) {
    CHECK(ids.insert(d.id).second);  // ids unique
    CHECK_FALSE(d.claim.empty());
    CHECK_FALSE(d.universe.empty());
  }
  for (const char* anchor : required_anchors) {
    bool covered = false;
    for (const auto& d : defs)
      covered = covered || d.anchor.find(anchor) != std::string::npos;
    CAPTURE(anchor);
    CHECK(covered);
  }
}

TEST_CASE("manifest hash is stable within a build and reports embed it") {
  const std::string h = mk::manifest_hash();
  CHECK_FALSE(h.empty());
  CHECK(h == mk::manifest_hash());

  mk::VerifierConfig cfg;
  cfg.check_ids = {"ENUM-COMPLETE"};
  const auto rep = mk::run_suite(cfg);
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.results[0].status == mk::CheckResult::Status::Pass);
  const auto j = nlohmann::json::parse(mk::report_to_json(rep));
  CHECK(j["manifest_hash"] == h);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"][0]["check_id"] == "ENUM-COMPLETE");
}

TEST_CASE("run_suite rejects unknown check ids") {
  mk::VerifierConfig cfg;
  cfg.check_ids = {"NO-SUCH-CHECK"};
  CHECK_THROWS_AS(mk::run_suite(cfg), mk::ValidationError);
}

TEST_CASE("a fast subset of the suite passes at reduced caps") {
  mk::VerifierConfig cfg;
  cfg.check_ids = {"SREG-1", "FOUNTAIN-R-ANNIH", "FOUNTAIN-OBSTRUCT",
                   "LABUND-OBSTRUCT", "CHAIN-COORD"};
  cfg.enum_order_max = 2;
  cfg.catalog_order_max = 4;
  const auto rep = mk::run_suite(cfg);
  CHECK(rep.all_passed);
  for (const auto& r : rep.results) {
    CAPTURE(r.id);
    CHECK(r.counterexample.empty());
  }
}

namespace {

// Mutation hook: an S(M)-shaped view with one corrupted product cell.
class CorruptedS final : public mk::MonoidView {
public:
  CorruptedS(const mk::FiniteMonoid& base, mk::Elem at, mk::Elem to)
      : sv_(base), at_(at), to_(to) {}
  std::size_t order() const override { return sv_.order(); }
  mk::Elem identity() const override { return sv_.identity(); }
  mk::Elem product(mk::Elem a, mk::Elem b) const override {
    const mk::Elem p = sv_.product(a, b);
    return (a == at_ && b == at_) ? to_ : p;
  }
  const mk::SView& inner() const { return sv_; }

private:
  mk::SView sv_;
  mk::Elem at_, to_;
};

}  // namespace

TEST_CASE("mutation: a corrupted S-product is detected") {
  const mk::FiniteMonoid z2 = mk::make_cyclic_group(2);
  const mk::SView sv(z2);
  // pick an idempotent other than the identity and break its square
  mk::Elem victim = mk::kNoElem;
  mk::idempotents(sv).for_each([&](mk::Elem e) {
    if (victim == mk::kNoElem && e != sv.identity()) victim = e;
  });
  REQUIRE(victim != mk::kNoElem);
  const CorruptedS bad(z2, victim, sv.identity());

  // the idempotent-formula comparison that SREG-1 performs now fails:
  // the formula says `victim` is idempotent, the table says it is not
  const bool table_idem = bad.product(victim, victim) == victim;
  const mk::SElem d = sv.decode(victim);
  const bool formula_idem = z2.at(d.elem, d.elem) == d.elem &&
                            (sv.act(d.elem, d.subset) & ~d.subset) == 0;
  CHECK(formula_idem);
  CHECK_FALSE(table_idem);

  // and the generic view validator also notices (identity/associativity)
  CHECK(mk::find_view_violation(bad, 4096, 0, 1).has_value());
}

TEST_CASE("search_counterexample finds known failures and knows its predicates") {
  const auto preds = mk::predicate_ids();
  CHECK(std::find(preds.begin(), preds.end(), "principally-right-ideal-howson") !=
        preds.end());
  CHECK_THROWS_AS(mk::search_counterexample("bogus", 1, 2), mk::ValidationError);

  // every monoid of order <= 3 satisfies the S-regularity equivalence
  CHECK_FALSE(mk::search_counterexample("s-regular-iff-group", 1, 3).has_value());

  // frozen fixture: the smallest non-principally-right-ideal-Howson monoid
  // has order 5 (and there is exactly one such class of that order)
  CHECK_FALSE(mk::search_counterexample("principally-right-ideal-howson", 1, 4)
                  .has_value());
  const auto hit = mk::search_counterexample("principally-right-ideal-howson", 1, 5);
  REQUIRE(hit.has_value());
  CHECK(hit->monoid.order() == 5);
}

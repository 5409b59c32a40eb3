#ifndef MONOIDKIT_DECIDERS_HPP
#define MONOIDKIT_DECIDERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "monoidkit/acts.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/monoid.hpp"
#include "monoidkit/relations.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

/// Violating pair for a Howson-style verdict, with the minimum generating
/// set of the offending ideal intersection.
struct HowsonWitness {
  Elem a = kNoElem, b = kNoElem;
  std::vector<Elem> generators;
};

struct PrincipalHowsonResult {
  bool verdict = true;
  std::optional<HowsonWitness> witness;  // set on false
};

/// True iff every nonempty intersection of two principal side-ideals is
/// itself principal.
PrincipalHowsonResult is_principally_ideal_howson(const MonoidView& v, Side side);

struct StrongHowsonEntry {
  Elem a, b;
  std::size_t n;  // minimum count of principal ideals covering aM n bM
  bool exact;
  std::vector<Elem> covers;
};

/// Per-pair minimum cover of each nonempty principal-ideal intersection
/// by principal ideals of its own elements. The structural minimum (one
/// generator per maximal divisibility class) is always exact; a
/// branch-and-bound set cover cross-checks it when the intersection has
/// at most exact_cap elements.
struct StrongHowsonProfile {
  Side side;
  std::size_t max_n = 0;
  bool all_exact = true;
  std::vector<StrongHowsonEntry> entries;
};

StrongHowsonProfile strong_howson_profile(const MonoidView& v, Side side,
                                          std::size_t exact_cap = 24);

struct HowsonReport {
  bool ideal_howson = true;  // constant on finite views
  PrincipalHowsonResult principal;
  StrongHowsonProfile strong;
};

HowsonReport howson_report(const MonoidView& v, Side side);

/// A candidate left co-ordinate system for (a, b) with respect to the
/// subsets A, B: pairs (p,q) with pa = qb.
struct CoordSystem {
  Elem a, b;
  ElemSet A, B;
  std::vector<ElemPair> pairs;
};

struct CoordCheckResult {
  bool ok = true;
  std::optional<ElemPair> failing;  // (x, y) missed by the system
};

/// Checks the covering condition: for every (x,y) with xa = yb there are
/// t and (p,q) in the system with tpa = xa and tpA u tqB subset xA u yB.
/// Throws ValidationError when a pair of the system has pa != qb.
CoordCheckResult coordinate_system_check(const MonoidView& v, const CoordSystem& cs);

struct MinCoordResult {
  bool exact = true;
  std::size_t size = 0;
  std::vector<ElemPair> pairs;
};

/// Minimum size of a left co-ordinate system for (a,b,A,B). Exact search
/// up to cap_n by branch and bound over coverage-deduplicated candidates;
/// greedy upper bound (exact = false) above the cap. Size 0 iff
/// L(a,b) is empty.
MinCoordResult min_coordinate_system(const MonoidView& v, Elem a, Elem b,
                                     const ElemSet& A, const ElemSet& B,
                                     std::size_t cap_n = 3);

struct CoordBudget {
  std::size_t exhaustive_upto = 5;  // full 4^order quantification cap
  std::size_t samples = 2000;       // (a,b,A,B) samples above the cap
  std::uint64_t seed = 1;
  bool allow_sampling = true;
};

struct NCoordResult {
  bool verdict = true;
  bool sampled = false;
  Elem worst_a = kNoElem, worst_b = kNoElem;
  ElemSet worst_A, worst_B;
  std::size_t worst_min = 0;  // largest minimum seen (upper bound if inexact)
};

/// True iff every (a,b,A,B) admits a co-ordinate system of size at most
/// n. Exhaustive for order <= budget.exhaustive_upto, else seeded
/// sampling (flagged). Throws CapacityError when over budget and
/// sampling is disallowed.
NCoordResult is_n_left_coordinated(const MonoidView& v, std::size_t n,
                                   const CoordBudget& budget = {});

struct AnnihilatorStat {
  Elem a;
  MinGenResult right, left;  // generators of r(a) and l(a)
};

struct WeakCoherenceReport {
  // constant-true on finite views; kept for the record
  bool right_ideal_howson = true, left_ideal_howson = true;
  bool finitely_right_equated = true, finitely_left_equated = true;

  std::size_t max_r_generators = 0, max_l_generators = 0;  // upper bounds
  bool r_all_exact = true, l_all_exact = true;
  std::vector<AnnihilatorStat> annihilators;

  std::size_t max_right_intersection_generators = 0;
  std::size_t max_left_intersection_generators = 0;
};

WeakCoherenceReport weak_coherence_report(const MonoidView& v);

/// Predicted singleton generating sets in S(M): r((A,a)) generated by
/// {((0,1),(a^-1 A, e))} for an idempotent e with a L* e, and l((A,a))
/// generated by {((A,1),(0,1))} when the base is right cancellative.
struct SPredictedGenerators {
  std::size_t r_applicable = 0, r_confirmed = 0;
  std::size_t l_applicable = 0, l_confirmed = 0;
};

SPredictedGenerators s_predicted_generators(const SView& sv);

/// Singleton checks backing the report, exposed for the test suite.
/// r((A,a)) in S(M) equals the closure of {((0,1),(a^-1 A, e))}.
bool fre_rabund_check(const SView& sv, Mask A, Elem a, Elem e);
/// l((A,a)) in S(M) equals the closure of {((A,1),(0,1))}.
bool rcanc_check(const SView& sv, Mask A, Elem a);

}  // namespace monoidkit

#endif

#ifndef MONOIDKIT_ACTS_HPP
#define MONOIDKIT_ACTS_HPP

#include <optional>
#include <span>
#include <vector>

#include "monoidkit/expansion.hpp"
#include "monoidkit/monoid.hpp"
#include "monoidkit/relations.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

/// A one-sided ideal with an irredundant generating set of R- (or L-)
/// incomparable elements; generators are minimum-cardinality for ideals.
struct IdealSet {
  Side side;
  ElemSet carrier;
  std::vector<Elem> generators;
};

IdealSet principal_ideal(const MonoidView& v, Elem a, Side side);

/// Intersection of the two principal side-ideals of a and b. An empty
/// intersection yields an empty carrier and generator list.
IdealSet ideal_intersection(const MonoidView& v, Elem a, Elem b, Side side);

/// Minimum generators of an arbitrary side-closed subset (one generator
/// per maximal divisibility class).
std::vector<Elem> ideal_generators(const MonoidView& v, const ElemSet& carrier, Side side);

/// Set of ordered element pairs, sorted and deduplicated.
struct PairSet {
  std::vector<ElemPair> pairs;

  void add(Elem u, Elem v) { pairs.emplace_back(u, v); }
  void normalize();
  bool contains(ElemPair p) const;
  std::size_t size() const { return pairs.size(); }
};

/// R(a,b) = {(u,v) : au = bv} (Side::Right) or
/// L(a,b) = {(p,q) : pa = qb} (Side::Left), by definition scan.
PairSet subact_RL(const MonoidView& v, Elem a, Elem b, Side side);

/// Minimum generating set of a subact of v x v under the diagonal action
/// (u,v)*t = (ut,vt) (right) or t*(u,v) = (tu,tv) (left). Validates
/// closure; throws ValidationError naming the escaping pair and t.
std::vector<ElemPair> subact_generators(const MonoidView& v, const PairSet& p, Side side);

/// Exact minimum generator count of the subact (same computation,
/// exposed for profile reporting).
std::size_t subact_min_generators(const MonoidView& v, const PairSet& p, Side side);

/// Membership in the principal subact generated by g.
bool subact_divides(const MonoidView& v, ElemPair g, ElemPair target, Side side);

/// Smallest congruence of the stated kind containing W, by union-find
/// with a multiplication worklist.
EqRelation congruence_closure(const MonoidView& v, std::span<const ElemPair> w,
                              RelKind kind);

/// One step of a W-sequence: endpoints c*t and d*t (right side) with
/// (c,d) in W u W^-1.
struct WStep {
  Elem c, d, t;
};

/// Witness that a and b are related in the congruence generated by W:
/// a = c1 t1, d1 t1 = c2 t2, ..., dn tn = b (right side; the left side
/// multiplies on the other side). n = 0 encodes a = b.
struct WSequence {
  Elem a, b;
  Side side;
  std::vector<WStep> steps;
};

/// Shortest witness (BFS over the rewrite graph), or nullopt when a and b
/// are not related.
std::optional<WSequence> find_w_sequence(const MonoidView& v,
                                         std::span<const ElemPair> w, Side side,
                                         Elem a, Elem b);

/// Replays every equality in the witness.
bool replay_w_sequence(const MonoidView& v, std::span<const ElemPair> w,
                       const WSequence& ws);

/// The projected list ((c1,d1),...,(cn,dn)).
std::vector<ElemPair> skeleton(const WSequence& ws);

struct MinGenResult {
  bool exact = false;
  std::size_t lower = 0;      // certified lower bound
  std::size_t upper = 0;      // size of `generators`
  std::vector<ElemPair> generators;
};

/// Minimum-cardinality generating set of a one-sided congruence. Exact
/// search covers target sizes 0..size_cap over a deduplicated candidate
/// pool of at most pool_cap pairs; otherwise reports an irredundant upper
/// bound and the certified lower bound. Throws when rel is not a
/// congruence on the stated side.
MinGenResult min_generators_congruence(const MonoidView& v, const EqRelation& rel,
                                       Side side, std::size_t pool_cap = 64,
                                       std::size_t size_cap = 2);

/// Membership test (X,x) in (P,p)*S(M) (right) or S(M)*(P,p) (left) via
/// divisor enumeration over the base, without scanning all of S(M).
bool s_divides(const SView& sv, Elem gen, Elem target, Side side);

/// Principal-side-ideal of an S(M) element as a bitset over S(M).
ElemSet s_principal_ideal(const SView& sv, Elem g, Side side);

}  // namespace monoidkit

#endif

#ifndef MONOIDKIT_RELATIONS_HPP
#define MONOIDKIT_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "monoidkit/kernels.hpp"
#include "monoidkit/monoid.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

enum class RelKind { Plain, RightCongruence, LeftCongruence, TwoSided };

/// Partition of the elements of a view. Canonical form: each element is
/// mapped to the least element of its class, so equal partitions compare
/// equal with operator==.
class EqRelation {
public:
  EqRelation() = default;
  EqRelation(std::vector<Elem> reps, RelKind kind);

  static EqRelation identity(std::size_t n, RelKind kind = RelKind::Plain);
  static EqRelation universal(std::size_t n, RelKind kind = RelKind::Plain);

  std::size_t size() const { return reps_.size(); }
  RelKind kind() const { return kind_; }
  void set_kind(RelKind k) { kind_ = k; }

  Elem rep(Elem x) const { return reps_[x]; }
  bool same(Elem x, Elem y) const { return reps_[x] == reps_[y]; }
  std::size_t num_classes() const;
  std::vector<std::vector<Elem>> classes() const;

  bool is_identity() const;
  bool is_universal() const;

  /// This partition refines o: every class of *this lies in a class of o.
  bool refines(const EqRelation& o) const;

  /// Common refinement (intersection as sets of pairs).
  EqRelation meet(const EqRelation& o) const;

  /// Equality of partitions; kind is ignored.
  bool operator==(const EqRelation& o) const { return reps_ == o.reps_; }
  bool operator!=(const EqRelation& o) const { return !(*this == o); }

  const std::vector<Elem>& reps() const { return reps_; }

private:
  std::vector<Elem> reps_;
  RelKind kind_ = RelKind::Plain;
};

/// True when x ~ y implies xt ~ yt (Right) / tx ~ ty (Left) for all t.
bool is_congruence(const MonoidView& v, const EqRelation& rel, Side side);

ElemSet idempotents(const MonoidView& v);

/// {u : a*u in A}.
ElemSet preimage_set(const MonoidView& v, Elem a, const ElemSet& A);

/// {a*u : u in A}.
ElemSet image_set(const MonoidView& v, Elem a, const ElemSet& A);

/// {e in E(v) : eA subset of A}.
ElemSet hat_set(const MonoidView& v, const ElemSet& A);

/// r(a) = {(u,v) : au = av}, a right congruence.
EqRelation right_annihilator(const MonoidView& v, Elem a);
/// l(a) = {(u,v) : ua = va}, a left congruence.
EqRelation left_annihilator(const MonoidView& v, Elem a);

/// a L* b iff r(a) = r(b); contains Green's L and is a right congruence.
EqRelation relation_Lstar(const MonoidView& v);
/// a R* b iff l(a) = l(b).
EqRelation relation_Rstar(const MonoidView& v);

/// a ~L_E b iff {e in E : ae=a} = {e in E : be=b}. E must consist of
/// idempotents. Not closed under multiplication in general.
EqRelation relation_Ltilde(const MonoidView& v, const ElemSet& E);
EqRelation relation_Rtilde(const MonoidView& v, const ElemSet& E);

/// The pre-order underlying ~L_E: a <= b iff every right identity of b
/// in E is a right identity of a.
bool ltilde_leq(const MonoidView& v, const ElemSet& E, Elem a, Elem b);
bool rtilde_leq(const MonoidView& v, const ElemSet& E, Elem a, Elem b);

struct GreensRelations {
  EqRelation R, L, H, D;  // D = J on finite views
};
GreensRelations greens_relations(const MonoidView& v);

/// Least two-sided congruence identifying all elements of E.
EqRelation sigma_congruence(const MonoidView& v, const ElemSet& E);

struct ClassificationReport {
  bool group = false;
  bool left_cancellative = false;
  bool right_cancellative = false;
  bool unipotent = false;  // 1 is the unique idempotent
  bool regular = false;
  bool inverse = false;
  bool proper_inverse = false;
  bool left_abundant = false;
  bool right_abundant = false;
  bool left_fountain = false;
  bool right_fountain = false;

  /// E used for the tilde/Ehresmann checks; empty when they were skipped.
  std::vector<Elem> E;
  bool e_checks_done = false;
  bool right_ehresmann = false, left_ehresmann = false;
  bool right_adequate = false, left_adequate = false;
  bool right_restriction = false, left_restriction = false;
  bool right_ample = false, left_ample = false;
  bool proper_right_restriction = false, proper_left_restriction = false;
  bool proper_right_ample = false, proper_left_ample = false;
};

/// E must be a sub-semilattice of idempotents; throws ValidationError
/// naming the offending pair otherwise.
ClassificationReport classify(const MonoidView& v, const ElemSet& E);

/// E defaults to E(v); the Ehresmann-type checks are skipped unless E(v)
/// happens to be a semilattice.
ClassificationReport classify(const MonoidView& v);

/// Nonempty iff E is not a sub-semilattice of the idempotents; the value
/// names the failure.
std::optional<std::string> semilattice_violation(const MonoidView& v, const ElemSet& E);

}  // namespace monoidkit

#endif

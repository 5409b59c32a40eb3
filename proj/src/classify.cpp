#include "monoidkit/relations.hpp"

namespace monoidkit {

namespace {

bool classes_meet(const EqRelation& rel, const ElemSet& s) {
  for (const auto& cls : rel.classes()) {
    bool hit = false;
    for (Elem x : cls)
      if (s.test(x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool rows_injective(const MonoidView& v, Side side) {
  const std::size_t n = v.order();
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem u = 0; u < n; ++u) {
      Elem p = side == Side::Right ? v.product(a, u) : v.product(u, a);
      if (seen[p]) return false;
      seen[p] = 1;
    }
  }
  return true;
}

/// Unique member of E per class, or empty on failure.
std::vector<Elem> unique_projections(const EqRelation& rel, const ElemSet& E) {
  std::vector<Elem> proj(rel.size(), kNoElem);
  for (Elem x = 0; x < rel.size(); ++x) {
    if (!E.test(x)) continue;
    Elem r = rel.rep(x);
    if (proj[r] != kNoElem) return {};  // two E-elements in one class
    proj[r] = x;
  }
  for (Elem x = 0; x < rel.size(); ++x) {
    if (proj[rel.rep(x)] == kNoElem) return {};  // class missing an E-element
    proj[x] = proj[rel.rep(x)];
  }
  return proj;
}

}  // namespace

ClassificationReport classify(const MonoidView& v, const ElemSet& E) {
  if (auto err = semilattice_violation(v, E))
    throw ValidationError("classify: E is not a semilattice: " + *err);

  ClassificationReport r;
  const std::size_t n = v.order();
  const ElemSet idem = idempotents(v);

  r.left_cancellative = rows_injective(v, Side::Right);
  r.right_cancellative = rows_injective(v, Side::Left);
  r.group = r.left_cancellative && r.right_cancellative;
  r.unipotent = idem.count() == 1;

  auto reg = regular_witnesses(v);
  r.regular = std::find(reg.begin(), reg.end(), kNoElem) == reg.end();

  bool idem_commute = true;
  idem.for_each([&](Elem e) {
    idem.for_each([&](Elem f) {
      if (v.product(e, f) != v.product(f, e)) idem_commute = false;
    });
  });
  r.inverse = r.regular && idem_commute;

  const EqRelation Lstar = relation_Lstar(v);
  const EqRelation Rstar = relation_Rstar(v);
  r.right_abundant = classes_meet(Lstar, idem);
  r.left_abundant = classes_meet(Rstar, idem);
  r.right_fountain = classes_meet(relation_Ltilde(v, idem), idem);
  r.left_fountain = classes_meet(relation_Rtilde(v, idem), idem);

  if (r.inverse) {
    const EqRelation sigma = sigma_congruence(v, idem);
    r.proper_inverse = greens_relations(v).L.meet(sigma).is_identity();
  }

  r.E = E.elems();
  r.e_checks_done = true;

  const EqRelation LtE = relation_Ltilde(v, E);
  const EqRelation RtE = relation_Rtilde(v, E);
  const EqRelation sigmaE = sigma_congruence(v, E);

  auto star = unique_projections(LtE, E);
  r.right_ehresmann = !star.empty() && is_congruence(v, LtE, Side::Right);
  r.right_adequate = r.right_ehresmann && LtE == Lstar;
  if (r.right_ehresmann) {
    bool ample_id = true;  // ea = a(ea)*
    for (Elem a = 0; a < n && ample_id; ++a)
      E.for_each([&](Elem e) {
        const Elem ea = v.product(e, a);
        if (v.product(a, star[ea]) != ea) ample_id = false;
      });
    r.right_restriction = ample_id;
    r.right_ample = r.right_adequate && ample_id;
    r.proper_right_restriction = r.right_restriction && LtE.meet(sigmaE).is_identity();
    r.proper_right_ample = r.right_ample && Lstar.meet(sigmaE).is_identity();
  }

  auto plus = unique_projections(RtE, E);
  r.left_ehresmann = !plus.empty() && is_congruence(v, RtE, Side::Left);
  r.left_adequate = r.left_ehresmann && RtE == Rstar;
  if (r.left_ehresmann) {
    bool ample_id = true;  // ae = (ae)+ a
    for (Elem a = 0; a < n && ample_id; ++a)
      E.for_each([&](Elem e) {
        const Elem ae = v.product(a, e);
        if (v.product(plus[ae], a) != ae) ample_id = false;
      });
    r.left_restriction = ample_id;
    r.left_ample = r.left_adequate && ample_id;
    r.proper_left_restriction = r.left_restriction && RtE.meet(sigmaE).is_identity();
    r.proper_left_ample = r.left_ample && Rstar.meet(sigmaE).is_identity();
  }
  return r;
}

ClassificationReport classify(const MonoidView& v) {
  const ElemSet idem = idempotents(v);
  if (!semilattice_violation(v, idem)) return classify(v, idem);
  // E(v) is not a semilattice: run with E = {1} for the base flags and
  // mark the Ehresmann-type verdicts as skipped.
  ElemSet one(v.order());
  one.set(v.identity());
  ClassificationReport r = classify(v, one);
  r.e_checks_done = false;
  r.E.clear();
  return r;
}

}  // namespace monoidkit

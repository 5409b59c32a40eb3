#include "monoidkit/relations.hpp"

#include <algorithm>
#include <map>

#include "monoidkit/acts.hpp"

namespace monoidkit {

EqRelation::EqRelation(std::vector<Elem> reps, RelKind kind)
    : reps_(std::move(reps)), kind_(kind) {
  // normalize: rep of each class is its least element
  std::vector<Elem> least(reps_.size(), kNoElem);
  for (Elem x = 0; x < reps_.size(); ++x) {
    Elem c = reps_[x];
    if (least[c] == kNoElem) least[c] = x;
  }
  for (auto& r : reps_) r = least[r];
}

EqRelation EqRelation::identity(std::size_t n, RelKind kind) {
  std::vector<Elem> reps(n);
  for (Elem x = 0; x < n; ++x) reps[x] = x;
  return EqRelation(std::move(reps), kind);
}

EqRelation EqRelation::universal(std::size_t n, RelKind kind) {
  return EqRelation(std::vector<Elem>(n, 0), kind);
}

std::size_t EqRelation::num_classes() const {
  std::size_t c = 0;
  for (Elem x = 0; x < reps_.size(); ++x)
    if (reps_[x] == x) ++c;
  return c;
}

std::vector<std::vector<Elem>> EqRelation::classes() const {
  std::map<Elem, std::vector<Elem>> by_rep;
  for (Elem x = 0; x < reps_.size(); ++x) by_rep[reps_[x]].push_back(x);
  std::vector<std::vector<Elem>> out;
  out.reserve(by_rep.size());
  for (auto& [r, cls] : by_rep) out.push_back(std::move(cls));
  return out;
}

bool EqRelation::is_identity() const {
  for (Elem x = 0; x < reps_.size(); ++x)
    if (reps_[x] != x) return false;
  return true;
}

bool EqRelation::is_universal() const {
  for (auto r : reps_)
    if (r != 0) return false;
  return !reps_.empty();
}

bool EqRelation::refines(const EqRelation& o) const {
  for (Elem x = 0; x < reps_.size(); ++x)
    if (!o.same(x, reps_[x])) return false;
  return true;
}

EqRelation EqRelation::meet(const EqRelation& o) const {
  const std::size_t n = reps_.size();
  std::map<std::pair<Elem, Elem>, Elem> seen;
  std::vector<Elem> out(n);
  for (Elem x = 0; x < n; ++x) {
    auto key = std::make_pair(reps_[x], o.reps_[x]);
    auto [it, fresh] = seen.emplace(key, x);
    out[x] = fresh ? x : it->second;
  }
  return EqRelation(std::move(out), RelKind::Plain);
}

bool is_congruence(const MonoidView& v, const EqRelation& rel, Side side) {
  const std::size_t n = v.order();
  for (Elem x = 0; x < n; ++x) {
    const Elem r = rel.rep(x);
    if (r == x) continue;
    for (Elem t = 0; t < n; ++t) {
      if (side == Side::Right) {
        if (!rel.same(v.product(x, t), v.product(r, t))) return false;
      } else {
        if (!rel.same(v.product(t, x), v.product(t, r))) return false;
      }
    }
  }
  return true;
}

ElemSet idempotents(const MonoidView& v) { return idempotent_set(v); }

ElemSet preimage_set(const MonoidView& v, Elem a, const ElemSet& A) {
  const std::size_t n = v.order();
  ElemSet out(n);
  for (Elem u = 0; u < n; ++u)
    if (A.test(v.product(a, u))) out.set(u);
  return out;
}

ElemSet image_set(const MonoidView& v, Elem a, const ElemSet& A) {
  ElemSet out(v.order());
  A.for_each([&](Elem u) { out.set(v.product(a, u)); });
  return out;
}

ElemSet hat_set(const MonoidView& v, const ElemSet& A) {
  ElemSet out(v.order());
  idempotents(v).for_each([&](Elem e) {
    if (image_set(v, e, A).subset_of(A)) out.set(e);
  });
  return out;
}

EqRelation right_annihilator(const MonoidView& v, Elem a) {
  return EqRelation(annihilator_signature(v, a, Side::Right), RelKind::RightCongruence);
}

EqRelation left_annihilator(const MonoidView& v, Elem a) {
  return EqRelation(annihilator_signature(v, a, Side::Left), RelKind::LeftCongruence);
}

EqRelation relation_Lstar(const MonoidView& v) {
  return EqRelation(star_partition(v, Side::Right), RelKind::RightCongruence);
}

EqRelation relation_Rstar(const MonoidView& v) {
  return EqRelation(star_partition(v, Side::Left), RelKind::LeftCongruence);
}

namespace {

void require_idempotents(const MonoidView& v, const ElemSet& E) {
  std::optional<Elem> bad;
  E.for_each([&](Elem e) {
    if (!bad && v.product(e, e) != e) bad = e;
  });
  if (bad) throw ValidationError("E contains non-idempotent element " + std::to_string(*bad));
}

/// Right identities of a drawn from E, as a bitset.
ElemSet right_identities(const MonoidView& v, const ElemSet& E, Elem a) {
  ElemSet out(v.order());
  E.for_each([&](Elem e) {
    if (v.product(a, e) == a) out.set(e);
  });
  return out;
}

ElemSet left_identities(const MonoidView& v, const ElemSet& E, Elem a) {
  ElemSet out(v.order());
  E.for_each([&](Elem e) {
    if (v.product(e, a) == a) out.set(e);
  });
  return out;
}

EqRelation tilde_relation(const MonoidView& v, const ElemSet& E, Side side) {
  require_idempotents(v, E);
  const std::size_t n = v.order();
  std::map<std::vector<Elem>, Elem> seen;
  std::vector<Elem> out(n);
  for (Elem a = 0; a < n; ++a) {
    auto ids = side == Side::Right ? right_identities(v, E, a) : left_identities(v, E, a);
    auto [it, fresh] = seen.emplace(ids.elems(), a);
    out[a] = fresh ? a : it->second;
  }
  return EqRelation(std::move(out), RelKind::Plain);
}

}  // namespace

EqRelation relation_Ltilde(const MonoidView& v, const ElemSet& E) {
  return tilde_relation(v, E, Side::Right);
}

EqRelation relation_Rtilde(const MonoidView& v, const ElemSet& E) {
  return tilde_relation(v, E, Side::Left);
}

bool ltilde_leq(const MonoidView& v, const ElemSet& E, Elem a, Elem b) {
  require_idempotents(v, E);
  return right_identities(v, E, b).subset_of(right_identities(v, E, a));
}

bool rtilde_leq(const MonoidView& v, const ElemSet& E, Elem a, Elem b) {
  require_idempotents(v, E);
  return left_identities(v, E, b).subset_of(left_identities(v, E, a));
}

namespace {

EqRelation group_by_sets(std::vector<ElemSet> sets) {
  const std::size_t n = sets.size();
  std::map<std::vector<Elem>, Elem> seen;
  std::vector<Elem> out(n);
  for (Elem x = 0; x < n; ++x) {
    auto [it, fresh] = seen.emplace(sets[x].elems(), x);
    out[x] = fresh ? x : it->second;
  }
  return EqRelation(std::move(out), RelKind::Plain);
}

}  // namespace

GreensRelations greens_relations(const MonoidView& v) {
  const std::size_t n = v.order();
  auto rmasks = ideal_masks(v, Side::Right);
  auto lmasks = ideal_masks(v, Side::Left);
  GreensRelations g;
  g.R = group_by_sets(rmasks);
  g.L = group_by_sets(lmasks);
  g.H = g.R.meet(g.L);
  // two-sided principal ideal MxM = union over u of (ux)M
  std::vector<ElemSet> dmasks(n);
#pragma omp parallel for schedule(static)
  for (long long xi = 0; xi < static_cast<long long>(n); ++xi) {
    const Elem x = static_cast<Elem>(xi);
    ElemSet d(n);
    for (Elem u = 0; u < n; ++u) d |= rmasks[v.product(u, x)];
    dmasks[x] = std::move(d);
  }
  g.D = group_by_sets(std::move(dmasks));
  return g;
}

EqRelation sigma_congruence(const MonoidView& v, const ElemSet& E) {
  if (E.none()) throw ValidationError("sigma_congruence: E must be nonempty");
  std::vector<ElemPair> pairs;
  Elem first = kNoElem;
  E.for_each([&](Elem e) {
    if (first == kNoElem)
      first = e;
    else
      pairs.emplace_back(first, e);
  });
  return congruence_closure(v, pairs, RelKind::TwoSided);
}

std::optional<std::string> semilattice_violation(const MonoidView& v, const ElemSet& E) {
  std::optional<std::string> out;
  E.for_each([&](Elem e) {
    if (out) return;
    if (v.product(e, e) != e) {
      out = "element " + std::to_string(e) + " is not idempotent";
      return;
    }
    E.for_each([&](Elem f) {
      if (out) return;
      const Elem ef = v.product(e, f);
      if (ef != v.product(f, e))
        out = "elements " + std::to_string(e) + " and " + std::to_string(f) +
              " do not commute";
      else if (!E.test(ef))
        out = "product of " + std::to_string(e) + " and " + std::to_string(f) +
              " leaves E";
    });
  });
  return out;
}

}  // namespace monoidkit

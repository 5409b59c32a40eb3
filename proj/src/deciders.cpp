#include "monoidkit/deciders.hpp"

#include <algorithm>
#include <random>

namespace monoidkit {

namespace {

/// Representatives of the maximal divisibility classes of an ideal,
/// given precomputed principal-ideal masks. This is the unique minimum
/// set of principal ideals covering the carrier.
std::vector<Elem> maximal_reps(const ElemSet& carrier, const std::vector<ElemSet>& masks) {
  const auto elems = carrier.elems();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < elems.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool i_le_j = masks[elems[j]].test(elems[i]);
      const bool j_le_i = masks[elems[i]].test(elems[j]);
      if (i_le_j && (!j_le_i || j < i)) dominated = true;
    }
    if (!dominated) out.push_back(elems[i]);
  }
  return out;
}

/// Branch-and-bound exact set cover; returns the minimum number of sets,
/// or SIZE_MAX if `limit` is too small.
struct CoverSearch {
  const std::vector<ElemSet>* sets;
  std::size_t best = SIZE_MAX;

  void run(const ElemSet& uncovered, std::size_t used, std::size_t limit) {
    if (!uncovered.any()) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 > limit || used + 1 >= best) return;
    Elem pivot = kNoElem;
    uncovered.for_each([&](Elem x) {
      if (pivot == kNoElem) pivot = x;
    });
    for (const auto& s : *sets) {
      if (!s.test(pivot)) continue;
      run(uncovered - s, used + 1, limit);
    }
  }
};

std::size_t set_cover_min(const std::vector<ElemSet>& sets, const ElemSet& universe,
                          std::size_t limit) {
  if (!universe.any()) return 0;
  CoverSearch cs{&sets};
  cs.run(universe, 0, limit);
  return cs.best;
}

}  // namespace

PrincipalHowsonResult is_principally_ideal_howson(const MonoidView& v, Side side) {
  const std::size_t n = v.order();
  const auto masks = ideal_masks(v, side);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      const ElemSet carrier = masks[a] & masks[b];
      if (!carrier.any()) continue;
      bool principal = false;
      carrier.for_each([&](Elem g) {
        if (!principal && masks[g] == carrier) principal = true;
      });
      if (!principal) {
        PrincipalHowsonResult res;
        res.verdict = false;
        res.witness = HowsonWitness{a, b, maximal_reps(carrier, masks)};
        return res;
      }
    }
  return {};
}

StrongHowsonProfile strong_howson_profile(const MonoidView& v, Side side,
                                          std::size_t exact_cap) {
  const std::size_t n = v.order();
  const auto masks = ideal_masks(v, side);
  StrongHowsonProfile prof;
  prof.side = side;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      const ElemSet carrier = masks[a] & masks[b];
      if (!carrier.any()) continue;
      StrongHowsonEntry e{a, b, 0, true, maximal_reps(carrier, masks)};
      e.n = e.covers.size();
      if (carrier.count() <= exact_cap) {
        std::vector<ElemSet> sets;
        carrier.for_each([&](Elem g) { sets.push_back(masks[g] & carrier); });
        const std::size_t bnb = set_cover_min(sets, carrier, e.n);
        if (bnb != e.n)
          throw ValidationError("strong_howson_profile: cover minimum mismatch at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
      }
      prof.max_n = std::max(prof.max_n, e.n);
      prof.entries.push_back(std::move(e));
    }
  return prof;
}

HowsonReport howson_report(const MonoidView& v, Side side) {
  HowsonReport r;
  r.principal = is_principally_ideal_howson(v, side);
  r.strong = strong_howson_profile(v, side);
  // implication chain: principal => max cover size 1
  if (r.principal.verdict && r.strong.max_n > 1)
    throw ValidationError("howson_report: principal verdict contradicts strong profile");
  return r;
}

namespace {

/// Shared precomputation for the co-ordinate system routines: the
/// instance list L(a,b), the translates xA and xB, and per-candidate
/// coverage bitsets over the instances.
struct CoordContext {
  const MonoidView& v;
  Elem a, b;
  std::vector<ElemSet> imgA, imgB;        // xA, xB per element
  std::vector<ElemPair> instances;        // L(a,b), sorted
  std::vector<Elem> xa_of;                // common value x*a = y*b per instance

  CoordContext(const MonoidView& view, Elem a_, Elem b_, const ElemSet& A,
               const ElemSet& B)
      : v(view), a(a_), b(b_) {
    const std::size_t n = v.order();
    imgA.reserve(n);
    imgB.reserve(n);
    for (Elem x = 0; x < n; ++x) {
      imgA.push_back(image_set(v, x, A));
      imgB.push_back(image_set(v, x, B));
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (v.product(x, a) == v.product(y, b)) {
          instances.emplace_back(x, y);
          xa_of.push_back(v.product(x, a));
        }
  }

  /// Instances served by the single pair (p, q).
  ElemSet coverage(ElemPair pq) const {
    const std::size_t n = v.order();
    ElemSet cov(instances.size());
    for (Elem t = 0; t < n; ++t) {
      const Elem tp = v.product(t, pq.first);
      const Elem tq = v.product(t, pq.second);
      const Elem tpa = v.product(tp, a);
      const ElemSet lhs = imgA[tp] | imgB[tq];
      for (std::size_t i = 0; i < instances.size(); ++i) {
        if (cov.test(static_cast<Elem>(i)) || xa_of[i] != tpa) continue;
        if (lhs.subset_of(imgA[instances[i].first] | imgB[instances[i].second]))
          cov.set(static_cast<Elem>(i));
      }
    }
    return cov;
  }
};

}  // namespace

CoordCheckResult coordinate_system_check(const MonoidView& v, const CoordSystem& cs) {
  for (auto [p, q] : cs.pairs)
    if (v.product(p, cs.a) != v.product(q, cs.b))
      throw ValidationError("coordinate_system_check: pair (" + std::to_string(p) + "," +
                            std::to_string(q) + ") is not in L(a,b)");
  CoordContext ctx(v, cs.a, cs.b, cs.A, cs.B);
  ElemSet covered(ctx.instances.size());
  for (auto pq : cs.pairs) covered |= ctx.coverage(pq);
  for (std::size_t i = 0; i < ctx.instances.size(); ++i)
    if (!covered.test(static_cast<Elem>(i))) return {false, ctx.instances[i]};
  return {};
}

MinCoordResult min_coordinate_system(const MonoidView& v, Elem a, Elem b,
                                     const ElemSet& A, const ElemSet& B,
                                     std::size_t cap_n) {
  CoordContext ctx(v, a, b, A, B);
  if (ctx.instances.empty()) return {};

  // candidates = instances; dedupe by coverage, order by decreasing reach
  std::vector<std::pair<ElemSet, ElemPair>> cands;
  for (auto pq : ctx.instances) {
    ElemSet cov = ctx.coverage(pq);
    bool dup = false;
    for (auto& [c, _] : cands)
      if (c == cov) {
        dup = true;
        break;
      }
    if (!dup) cands.emplace_back(std::move(cov), pq);
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& l, const auto& r) {
    return l.first.count() > r.first.count();
  });

  const ElemSet universe = [&] {
    ElemSet u(ctx.instances.size());
    for (std::size_t i = 0; i < ctx.instances.size(); ++i) u.set(static_cast<Elem>(i));
    return u;
  }();

  // iterative deepening keeps the first solution minimum-sized
  std::vector<std::size_t> chosen, best;
  bool found = false;
  auto dfs = [&](auto&& self, const ElemSet& uncovered, std::size_t limit) -> void {
    if (found) return;
    if (!uncovered.any()) {
      best = chosen;
      found = true;
      return;
    }
    if (chosen.size() == limit) return;
    Elem pivot = kNoElem;
    uncovered.for_each([&](Elem x) {
      if (pivot == kNoElem) pivot = x;
    });
    for (std::size_t i = 0; i < cands.size() && !found; ++i) {
      if (!cands[i].first.test(pivot)) continue;
      chosen.push_back(i);
      self(self, uncovered - cands[i].first, limit);
      chosen.pop_back();
    }
  };
  for (std::size_t limit = 1; limit <= cap_n && !found; ++limit)
    dfs(dfs, universe, limit);

  MinCoordResult res;
  if (found) {
    res.size = best.size();
    for (std::size_t i : best) res.pairs.push_back(cands[i].second);
    return res;
  }

  // greedy upper bound above the cap
  res.exact = false;
  ElemSet uncovered = universe;
  while (uncovered.any()) {
    std::size_t pick = SIZE_MAX, gain = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const std::size_t g = (cands[i].first & uncovered).count();
      if (g > gain) {
        gain = g;
        pick = i;
      }
    }
    res.pairs.push_back(cands[pick].second);
    uncovered -= cands[pick].first;
  }
  res.size = res.pairs.size();
  return res;
}

NCoordResult is_n_left_coordinated(const MonoidView& v, std::size_t n,
                                   const CoordBudget& budget) {
  const std::size_t order = v.order();
  NCoordResult res;
  const std::size_t cap = std::max<std::size_t>(n, 3);

  auto consider = [&](Elem a, Elem b, const ElemSet& A, const ElemSet& B,
                      NCoordResult& acc) {
    const MinCoordResult mc = min_coordinate_system(v, a, b, A, B, cap);
    if (mc.size > acc.worst_min || acc.worst_a == kNoElem) {
      acc.worst_min = mc.size;
      acc.worst_a = a;
      acc.worst_b = b;
      acc.worst_A = A;
      acc.worst_B = B;
    }
    if (mc.size > n || !mc.exact) acc.verdict = false;
  };

  if (order <= budget.exhaustive_upto) {
    const std::size_t nsub = std::size_t(1) << order;
    const std::size_t npairs = order * order;
    std::vector<NCoordResult> per_pair(npairs);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t pi = 0; pi < npairs; ++pi) {
      const Elem a = static_cast<Elem>(pi / order), b = static_cast<Elem>(pi % order);
      for (std::size_t ma = 0; ma < nsub; ++ma)
        for (std::size_t mb = 0; mb < nsub; ++mb) {
          ElemSet A(order), B(order);
          for (Elem i = 0; i < order; ++i) {
            if (ma >> i & 1) A.set(i);
            if (mb >> i & 1) B.set(i);
          }
          consider(a, b, A, B, per_pair[pi]);
        }
    }
    for (const auto& pp : per_pair) {
      if (pp.worst_a == kNoElem) continue;
      if (!pp.verdict) res.verdict = false;
      if (pp.worst_min > res.worst_min || res.worst_a == kNoElem) {
        res.worst_min = pp.worst_min;
        res.worst_a = pp.worst_a;
        res.worst_b = pp.worst_b;
        res.worst_A = pp.worst_A;
        res.worst_B = pp.worst_B;
      }
    }
    return res;
  }

  if (!budget.allow_sampling)
    throw CapacityError("is_n_left_coordinated: order " + std::to_string(order) +
                        " exceeds exhaustive cap " + std::to_string(budget.exhaustive_upto) +
                        " and sampling is disallowed");
  res.sampled = true;
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order - 1));
  for (std::size_t s = 0; s < budget.samples; ++s) {
    const Elem a = pick(rng), b = pick(rng);
    ElemSet A(order), B(order);
    for (Elem i = 0; i < order; ++i) {
      if (rng() & 1) A.set(i);
      if (rng() & 1) B.set(i);
    }
    consider(a, b, A, B, res);
  }
  return res;
}

WeakCoherenceReport weak_coherence_report(const MonoidView& v) {
  const std::size_t n = v.order();
  WeakCoherenceReport rep;
  for (Elem a = 0; a < n; ++a) {
    AnnihilatorStat st;
    st.a = a;
    st.right = min_generators_congruence(v, right_annihilator(v, a), Side::Right);
    st.left = min_generators_congruence(v, left_annihilator(v, a), Side::Left);
    rep.max_r_generators = std::max(rep.max_r_generators, st.right.upper);
    rep.max_l_generators = std::max(rep.max_l_generators, st.left.upper);
    rep.r_all_exact = rep.r_all_exact && st.right.exact;
    rep.l_all_exact = rep.l_all_exact && st.left.exact;
    rep.annihilators.push_back(std::move(st));
  }
  for (Side side : {Side::Right, Side::Left}) {
    const auto masks = ideal_masks(v, side);
    std::size_t worst = 0;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b) {
        const ElemSet carrier = masks[a] & masks[b];
        if (carrier.any()) worst = std::max(worst, maximal_reps(carrier, masks).size());
      }
    (side == Side::Right ? rep.max_right_intersection_generators
                         : rep.max_left_intersection_generators) = worst;
  }
  return rep;
}

bool fre_rabund_check(const SView& sv, Mask A, Elem a, Elem e) {
  const FiniteMonoid& m = sv.base();
  Mask pre = 0;
  for (Elem u = 0; u < m.order(); ++u)
    if (A >> m.at(a, u) & 1) pre |= Mask(1) << u;
  const ElemPair gen{sv.encode(0, m.identity()), sv.encode(pre, e)};
  const EqRelation closure =
      congruence_closure(sv, std::span(&gen, 1), RelKind::RightCongruence);
  return closure == right_annihilator(sv, sv.encode(A, a));
}

bool rcanc_check(const SView& sv, Mask A, Elem a) {
  const FiniteMonoid& m = sv.base();
  const ElemPair gen{sv.encode(A, m.identity()), sv.encode(0, m.identity())};
  const EqRelation closure =
      congruence_closure(sv, std::span(&gen, 1), RelKind::LeftCongruence);
  return closure == left_annihilator(sv, sv.encode(A, a));
}

SPredictedGenerators s_predicted_generators(const SView& sv) {
  const FiniteMonoid& m = sv.base();
  const std::size_t n = m.order();
  const EqRelation lstar = relation_Lstar(m);
  const ElemSet E = idempotents(m);

  bool right_cancellative = true;
  for (Elem c = 0; c < n && right_cancellative; ++c) {
    ElemSet seen(n);
    for (Elem x = 0; x < n; ++x) {
      const Elem xc = m.at(x, c);
      if (seen.test(xc)) {
        right_cancellative = false;
        break;
      }
      seen.set(xc);
    }
  }

  SPredictedGenerators out;
  const Mask all = (n >= 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
  for (Mask A = 0; A <= all; ++A) {
    for (Elem a = 0; a < n; ++a) {
      Elem e = kNoElem;
      E.for_each([&](Elem f) {
        if (e == kNoElem && lstar.same(a, f)) e = f;
      });
      if (e != kNoElem) {
        ++out.r_applicable;
        if (fre_rabund_check(sv, A, a, e)) ++out.r_confirmed;
      }
      if (right_cancellative) {
        ++out.l_applicable;
        if (rcanc_check(sv, A, a)) ++out.l_confirmed;
      }
    }
    if (A == all) break;  // avoid wraparound
  }
  return out;
}

}  // namespace monoidkit

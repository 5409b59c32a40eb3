#include "monoidkit/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <random>
#include <sstream>

#include "json.hpp"
#include "monoidkit/acts.hpp"
#include "monoidkit/catalog.hpp"
#include "monoidkit/deciders.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/io.hpp"
#include "monoidkit/relations.hpp"

namespace monoidkit {

namespace {

using Item = std::pair<std::string, FiniteMonoid>;

std::vector<Item> enum_universe(std::size_t maxn) {
  std::vector<Item> out;
  for (std::size_t n = 1; n <= maxn; ++n) {
    auto ms = enumerate_monoids(n);
    for (std::size_t i = 0; i < ms.size(); ++i)
      out.emplace_back("enum" + std::to_string(n) + "#" + std::to_string(i),
                       std::move(ms[i]));
  }
  return out;
}

std::vector<Item> catalog_universe(std::size_t maxn) {
  std::vector<Item> out;
  for (const auto& e : catalog_entries()) {
    FiniteMonoid m = e.build();
    if (m.order() <= maxn) out.emplace_back(e.name, std::move(m));
  }
  return out;
}

std::vector<Item> joint_universe(const VerifierConfig& cfg) {
  std::vector<Item> out = enum_universe(cfg.enum_order_max);
  for (auto& it : catalog_universe(cfg.catalog_order_max)) out.push_back(std::move(it));
  return out;
}

std::vector<Item> group_universe() {
  std::vector<Item> out;
  out.emplace_back("Z2", make_cyclic_group(2));
  out.emplace_back("Z3", make_cyclic_group(3));
  out.emplace_back("Z4", make_cyclic_group(4));
  out.emplace_back("V4", direct_product(make_cyclic_group(2), make_cyclic_group(2)));
  out.emplace_back("S3", make_symmetric_group3());
  return out;
}

CheckOutcome fail(const FiniteMonoid& m, const std::string& base_name,
                  const std::string& detail) {
  CheckOutcome o;
  o.failure = "base=" + base_name + ": " + detail;
  o.witness = m;
  return o;
}

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

/// a^{-1}A over the base, as a mask.
Mask preimage_mask(const FiniteMonoid& m, Elem a, Mask A) {
  Mask out = 0;
  for (Elem u = 0; u < m.order(); ++u)
    if (A >> m.at(a, u) & 1) out |= Mask(1) << u;
  return out;
}

/// The semilattice of idempotents {(F,1)} of S(M).
ElemSet script_e(const SView& sv) {
  ElemSet e(sv.order());
  for (Mask f = 0; f <= full_mask(sv.base_order()); ++f) {
    e.set(sv.encode(f, sv.base().identity()));
    if (f == full_mask(sv.base_order())) break;
  }
  return e;
}

/// E(S(M)) computed from the formula {(A,e): e in A-hat}.
ElemSet s_idempotents_formula(const SView& sv) {
  const FiniteMonoid& m = sv.base();
  ElemSet out(sv.order());
  ElemSet idem = idempotents(m);
  for (Mask a = 0; a <= full_mask(m.order()); ++a) {
    idem.for_each([&](Elem e) {
      if ((sv.act(e, a) & ~a) == 0) out.set(sv.encode(a, e));
    });
    if (a == full_mask(m.order())) break;
  }
  return out;
}

std::string spair(const SView& sv, Elem s) { return sv.label(s); }

bool is_right_cancellative(const FiniteMonoid& m) {
  const std::size_t n = m.order();
  for (Elem c = 0; c < n; ++c) {
    ElemSet seen(n);
    for (Elem x = 0; x < n; ++x) {
      const Elem xc = m.at(x, c);
      if (seen.test(xc)) return false;
      seen.set(xc);
    }
  }
  return true;
}

bool is_left_cancellative(const FiniteMonoid& m) {
  const std::size_t n = m.order();
  for (Elem c = 0; c < n; ++c) {
    ElemSet seen(n);
    for (Elem x = 0; x < n; ++x) {
      const Elem cx = m.at(c, x);
      if (seen.test(cx)) return false;
      seen.set(cx);
    }
  }
  return true;
}

bool is_group(const FiniteMonoid& m) {
  return is_left_cancellative(m) && is_right_cancellative(m);
}

ElemSet mask_to_set(std::size_t n, Mask m) { return ElemSet::from_mask(n, m); }

// ---------------------------------------------------------------- checks

CheckOutcome chk_sprod(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    if (auto bad = find_view_violation(sv, 4096, 20000, cfg.seed))
      return fail(m, name,
                  "S(M) violates associativity/identity at (" + spair(sv, (*bad)[0]) +
                      "," + spair(sv, (*bad)[1]) + "," + spair(sv, (*bad)[2]) + ")");
    try {
      check_retraction(sv, 1u << 16);
    } catch (const ValidationError& e) {
      return fail(m, name, std::string("retraction: ") + e.what());
    }
  }
  return {};
}

CheckOutcome chk_sreg1(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const ElemSet formula = s_idempotents_formula(sv);
    for (Elem s = 0; s < sv.order(); ++s)
      if ((sv.product(s, s) == s) != formula.test(s))
        return fail(m, name, "idempotent formula disagrees at " + spair(sv, s));
    const bool semilattice = !semilattice_violation(sv, formula).has_value();
    const bool unipotent = idempotents(m).count() == 1;
    if (semilattice != unipotent)
      return fail(m, name,
                  std::string("E(S(M)) semilattice=") + (semilattice ? "yes" : "no") +
                      " but |E(M)|=" + std::to_string(idempotents(m).count()));
  }
  return {};
}

CheckOutcome chk_sreg2(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const auto wit = regular_witnesses(sv);
    const bool regular = std::find(wit.begin(), wit.end(), kNoElem) == wit.end();
    if (regular != is_group(m))
      return fail(m, name, std::string("regular(S(M))=") + (regular ? "yes" : "no"));
  }
  for (const auto& [name, m] : group_universe()) {
    SView sv(m);
    const ClassificationReport r = classify(sv);
    if (!r.inverse || !r.proper_inverse)
      return fail(m, name, "S(group) not reported proper inverse");
    const GreensRelations g = greens_relations(sv);
    const EqRelation sigma = sigma_congruence(sv, idempotents(sv));
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        if (g.R.same(s, t) != (ds.subset == dt.subset))
          return fail(m, name, "group-case R description fails at " + spair(sv, s) +
                                   "," + spair(sv, t));
        if (g.L.same(s, t) != (preimage_mask(m, ds.elem, ds.subset) ==
                               preimage_mask(m, dt.elem, dt.subset)))
          return fail(m, name, "group-case L description fails at " + spair(sv, s) +
                                   "," + spair(sv, t));
        if (sigma.same(s, t) != (ds.elem == dt.elem))
          return fail(m, name, "group-case sigma description fails at " +
                                   spair(sv, s) + "," + spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_rrel1(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const EqRelation rs = relation_Rstar(sv), rb = relation_Rstar(m);
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        const bool rhs = ds.subset == dt.subset && rb.same(ds.elem, dt.elem);
        if (rs.same(s, t) != rhs)
          return fail(m, name, "R* description fails at " + spair(sv, s) + "," +
                                   spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_rrel2(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const EqRelation rt = relation_Rtilde(sv, idempotents(sv));
    // base tilde relation w.r.t. A-hat, per subset
    std::vector<EqRelation> per_mask(full_mask(m.order()) + 1);
    for (Mask a = 0; a <= full_mask(m.order()); ++a) {
      per_mask[a] = relation_Rtilde(m, hat_set(m, mask_to_set(m.order(), a)));
      if (a == full_mask(m.order())) break;
    }
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        const bool rhs =
            ds.subset == dt.subset && per_mask[ds.subset].same(ds.elem, dt.elem);
        if (rt.same(s, t) != rhs)
          return fail(m, name, "R-tilde description fails at " + spair(sv, s) + "," +
                                   spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_rrel3(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const EqRelation rte = relation_Rtilde(sv, script_e(sv));
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t)
        if (rte.same(s, t) != (sv.decode(s).subset == sv.decode(t).subset))
          return fail(m, name, "R-tilde-E description fails at " + spair(sv, s) +
                                   "," + spair(sv, t));
  }
  return {};
}

CheckOutcome chk_rrel4(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const bool eq = relation_Rstar(sv) == relation_Rtilde(sv, script_e(sv));
    if (eq != is_right_cancellative(m))
      return fail(m, name, std::string("R* == R-tilde-E is ") + (eq ? "true" : "false"));
  }
  return {};
}

CheckOutcome chk_rrel5(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const bool lhs = classify(sv).left_abundant;
    const EqRelation rb = relation_Rstar(m);
    const ElemSet idem = idempotents(m);
    bool rhs = true;
    for (Mask a = 0; a <= full_mask(m.order()) && rhs; ++a) {
      const ElemSet ahat = hat_set(m, mask_to_set(m.order(), a));
      for (Elem x = 0; x < m.order() && rhs; ++x) {
        bool found = false;
        ahat.for_each([&](Elem e) {
          if (rb.same(x, e)) found = true;
        });
        rhs = found;
      }
      if (a == full_mask(m.order())) break;
    }
    if (lhs != rhs)
      return fail(m, name,
                  std::string("left abundance of S(M) is ") + (lhs ? "true" : "false") +
                      " but the A-hat criterion says otherwise");
  }
  return {};
}

CheckOutcome chk_rrel6(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const ClassificationReport r = classify(sv, script_e(sv));
    if (!r.left_ehresmann || !r.left_restriction || !r.proper_left_restriction)
      return fail(m, name, "S(M) not proper left E-restriction");
    if (r.left_ample != is_right_cancellative(m))
      return fail(m, name,
                  std::string("left E-ample is ") + (r.left_ample ? "true" : "false"));
  }
  return {};
}

CheckOutcome chk_lrel1(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const EqRelation lt = relation_Ltilde(sv, idempotents(sv));
    const EqRelation lb = relation_Ltilde(m, idempotents(m));
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        const bool rhs = preimage_mask(m, ds.elem, ds.subset) ==
                             preimage_mask(m, dt.elem, dt.subset) &&
                         lb.same(ds.elem, dt.elem);
        if (lt.same(s, t) != rhs)
          return fail(m, name, "L-tilde description fails at " + spair(sv, s) + "," +
                                   spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_lrel2(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const EqRelation ls = relation_Lstar(sv), lb = relation_Lstar(m);
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        const bool rhs = preimage_mask(m, ds.elem, ds.subset) ==
                             preimage_mask(m, dt.elem, dt.subset) &&
                         lb.same(ds.elem, dt.elem);
        if (ls.same(s, t) != rhs)
          return fail(m, name, "L* description fails at " + spair(sv, s) + "," +
                                   spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_lrel3(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const EqRelation lte = relation_Ltilde(sv, script_e(sv));
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        if (lte.same(s, t) != (preimage_mask(m, ds.elem, ds.subset) ==
                               preimage_mask(m, dt.elem, dt.subset)))
          return fail(m, name, "L-tilde-E description fails at " + spair(sv, s) +
                                   "," + spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_lrel4(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const bool eq = relation_Lstar(sv) == relation_Ltilde(sv, script_e(sv));
    if (eq != is_left_cancellative(m))
      return fail(m, name, std::string("L* == L-tilde-E is ") + (eq ? "true" : "false"));
  }
  return {};
}

CheckOutcome chk_lrel5(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    if (classify(sv).right_abundant != classify(m).right_abundant)
      return fail(m, name, "right abundance does not transfer");
  }
  return {};
}

CheckOutcome chk_lrel6(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const ElemSet E = script_e(sv);
    const EqRelation lte = relation_Ltilde(sv, E);
    // every class holds exactly one member of E, namely (a^-1 A, 1)
    std::vector<int> count(sv.order(), 0);
    E.for_each([&](Elem e) { ++count[lte.rep(e)]; });
    for (Elem s = 0; s < sv.order(); ++s)
      if (count[lte.rep(s)] != 1)
        return fail(m, name, "L-tilde-E class of " + spair(sv, s) +
                                 " has != 1 idempotent from E");
    const ClassificationReport r = classify(sv, E);
    if (r.right_ehresmann != is_left_cancellative(m) ||
        r.right_adequate != is_left_cancellative(m))
      return fail(m, name,
                  std::string("right E-Ehresmann is ") +
                      (r.right_ehresmann ? "true" : "false") + ", base left cancellative is " +
                      (is_left_cancellative(m) ? "true" : "false"));
  }
  return {};
}

CheckOutcome chk_lrel7(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const ClassificationReport r = classify(sv, script_e(sv));
    if (r.right_ample != is_group(m))
      return fail(m, name,
                  std::string("right E-ample is ") + (r.right_ample ? "true" : "false"));
  }
  return {};
}

CheckOutcome chk_incl(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    const std::size_t n = m.order();
    bool a_inv_exact = true, a_app_exact = true;
    for (Elem a = 0; a < n; ++a)
      for (Mask x = 0; x <= full_mask(n); ++x) {
        Mask ax = 0;
        for (Elem u = 0; u < n; ++u)
          if (x >> u & 1) ax |= Mask(1) << m.at(a, u);
        const Mask pre_of_ax = preimage_mask(m, a, ax);          // a^-1(aX)
        const Mask a_of_pre = [&] {                              // a(a^-1 X)
          Mask out = 0;
          const Mask pre = preimage_mask(m, a, x);
          for (Elem u = 0; u < n; ++u)
            if (pre >> u & 1) out |= Mask(1) << m.at(a, u);
          return out;
        }();
        Mask am = 0;  // aM
        for (Elem u = 0; u < n; ++u) am |= Mask(1) << m.at(a, u);
        if ((x & ~pre_of_ax) != 0)
          return fail(m, name, "X not inside a^-1(aX)");
        if (a_of_pre != (am & x))
          return fail(m, name, "a(a^-1 X) != aM intersect X");
        if (pre_of_ax != x) a_inv_exact = false;
        if (a_of_pre != x) a_app_exact = false;
        if (x == full_mask(n)) break;
      }
    if (a_inv_exact != is_left_cancellative(m))
      return fail(m, name, "a^-1(aX)=X everywhere iff left cancellative fails");
    if (a_app_exact != is_group(m))
      return fail(m, name, "a(a^-1 X)=X everywhere iff group fails");
  }
  return {};
}

CheckOutcome chk_fin(const VerifierConfig& cfg, Side side) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    if (m.order() > 4) continue;  // S(M)^2 pair scan
    SView sv(m);
    const Elem m1 = sv.encode(full_mask(m.order()), m.identity());
    const PairSet r = subact_RL(sv, m1, m1, side);
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        bool expected;
        if (side == Side::Right) {
          expected = ds.elem == dt.elem;
        } else {
          const Mask dm = sv.act(ds.elem, full_mask(m.order()));
          expected = ds.elem == dt.elem && (ds.subset | dm) == (dt.subset | dm);
        }
        if (r.contains({s, t}) != expected)
          return fail(m, name,
                      std::string(side_name(side)) + " description of ((M,1),(M,1)) fails at " +
                          spair(sv, s) + "," + spair(sv, t));
      }
  }
  return {};
}

CheckOutcome chk_fin_r(const VerifierConfig& cfg) { return chk_fin(cfg, Side::Right); }
CheckOutcome chk_fin_l(const VerifierConfig& cfg) { return chk_fin(cfg, Side::Left); }

CheckOutcome chk_chain_rgen(const VerifierConfig&) {
  std::size_t prev = 0;
  for (std::size_t k = 2; k <= 5; ++k) {
    FiniteMonoid m = make_chain_semilattice(k);
    SView sv(m);
    const Elem m1 = sv.encode(full_mask(k), m.identity());
    const std::size_t g =
        subact_min_generators(sv, subact_RL(sv, m1, m1, Side::Right), Side::Right);
    if (g < prev)
      return fail(m, "chain" + std::to_string(k),
                  "generator count dropped: " + std::to_string(prev) + " -> " +
                      std::to_string(g));
    prev = g;
  }
  return {};
}

CheckOutcome chk_srih_equiv(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const bool base_p = is_principally_ideal_howson(m, Side::Right).verdict;
    const bool s_p = is_principally_ideal_howson(sv, Side::Right).verdict;
    if (base_p != s_p)
      return fail(m, name,
                  std::string("principally right ideal Howson: base=") +
                      (base_p ? "yes" : "no") + " S(M)=" + (s_p ? "yes" : "no"));
  }
  return {};
}

CheckOutcome chk_srih_impl(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    for (Side side : {Side::Right, Side::Left}) {
      const HowsonReport r = howson_report(m, side);
      if (!r.ideal_howson)
        return fail(m, name, "finite monoid not ideal Howson");
      if (r.principal.verdict && r.strong.max_n > 1)
        return fail(m, name, "principal but strong profile needs n > 1");
    }
  }
  return {};
}

/// K = {(A u B u C, u_i): C subset of L_i} generates (A,a)S n (B,b)S.
std::optional<std::string> srih_k_instance(const SView& sv, Mask A, Elem a, Mask B,
                                           Elem b) {
  const FiniteMonoid& m = sv.base();
  const std::size_t n = m.order();
  const Elem sa = sv.encode(A, a), sb = sv.encode(B, b);
  const ElemSet I =
      s_principal_ideal(sv, sa, Side::Right) & s_principal_ideal(sv, sb, Side::Right);

  // strong finite generating set of aM n bM (maximal divisibility reps)
  const auto masks = ideal_masks(m, Side::Right);
  const ElemSet inter = masks[a] & masks[b];
  if (!inter.any() && I.any()) return "aM n bM empty but (A,a)S n (B,b)S is not";
  // the K construction applies exactly when the intersection is nonempty
  if (!I.any()) return std::nullopt;
  const std::vector<Elem> us = ideal_generators(m, inter, Side::Right);

  ElemSet covered(sv.order());
  for (Elem u : us) {
    const ElemSet li = inter - masks[u];
    const auto lelems = li.elems();
    if (lelems.size() > 20) return "L_i unexpectedly large";
    for (Mask c_idx = 0; c_idx < (Mask(1) << lelems.size()); ++c_idx) {
      Mask C = 0;
      for (std::size_t i = 0; i < lelems.size(); ++i)
        if (c_idx >> i & 1) C |= Mask(1) << lelems[i];
      const Elem k = sv.encode(A | B | C, u);
      if (!I.test(k))
        return "K element " + sv.label(k) + " outside the intersection";
      covered |= s_principal_ideal(sv, k, Side::Right);
    }
  }
  if (!(covered == I)) {
    // name one missed element
    std::string miss;
    I.for_each([&](Elem x) {
      if (miss.empty() && !covered.test(x)) miss = sv.label(x);
    });
    (void)n;
    return "K does not generate the intersection; missed " + miss;
  }
  return std::nullopt;
}

CheckOutcome chk_srih_k(const VerifierConfig& cfg) {
  CheckOutcome out;
  // exhaustive over order <= 3 bases
  for (const auto& [name, m] : joint_universe(cfg)) {
    if (m.order() > 3) continue;
    SView sv(m);
    for (Elem s = 0; s < sv.order(); ++s)
      for (Elem t = 0; t < sv.order(); ++t) {
        const SElem ds = sv.decode(s), dt = sv.decode(t);
        if (auto why = srih_k_instance(sv, ds.subset, ds.elem, dt.subset, dt.elem))
          return fail(m, name, *why + " at ((A,a),(B,b))=(" + sv.label(s) + "," +
                                    sv.label(t) + ")");
      }
  }
  // sampled over order 4..5 bases
  std::mt19937_64 rng(cfg.seed);
  for (const auto& [name, m] : joint_universe(cfg)) {
    if (m.order() < 4 || m.order() > 5) continue;
    out.sampled = true;
    SView sv(m);
    std::uniform_int_distribution<Elem> el(0, static_cast<Elem>(m.order() - 1));
    const Mask fm = full_mask(m.order());
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const Mask A = rng() & fm, B = rng() & fm;
      const Elem a = el(rng), b = el(rng);
      if (auto why = srih_k_instance(sv, A, a, B, b))
        return fail(m, name, *why + " at sampled instance #" + std::to_string(i));
    }
  }
  return out;
}

CheckOutcome chk_lcoord_equiv(const VerifierConfig& cfg) {
  CheckOutcome out;
  for (const auto& [name, m] : joint_universe(cfg)) {
    SView sv(m);
    const bool s_p = is_principally_ideal_howson(sv, Side::Left).verdict;
    if (m.order() <= 3) {
      const bool coord = is_n_left_coordinated(m, 1).verdict;
      if (coord != s_p)
        return fail(m, name,
                    std::string("1-co-ordinated=") + (coord ? "yes" : "no") +
                        " but principally left ideal Howson(S(M))=" + (s_p ? "yes" : "no"));
    } else if (m.order() == 4) {
      out.sampled = true;
      CoordBudget budget;
      budget.exhaustive_upto = 3;  // forces the sampled path at order 4
      budget.samples = std::max<std::size_t>(cfg.samples, 2000);
      budget.seed = cfg.seed;
      bool coord = is_n_left_coordinated(m, 1, budget).verdict;
      if (coord != s_p)  // sampling can only miss witnesses; settle exactly
        coord = is_n_left_coordinated(m, 1).verdict;
      if (coord != s_p)
        return fail(m, name,
                    std::string("1-co-ordinated=") + (coord ? "yes" : "no") +
                        " but principally left ideal Howson(S(M))=" + (s_p ? "yes" : "no"));
    }
  }
  return out;
}

CheckOutcome chk_lcoord_d(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    if (m.order() > 3) continue;
    SView sv(m);
    const std::size_t n = m.order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Mask A = 0; A <= full_mask(n); ++A) {
          for (Mask B = 0; B <= full_mask(n); ++B) {
            const auto mc = min_coordinate_system(m, a, b, mask_to_set(n, A),
                                                  mask_to_set(n, B), 4);
            const ElemSet J = s_principal_ideal(sv, sv.encode(A, a), Side::Left) &
                              s_principal_ideal(sv, sv.encode(B, b), Side::Left);
            ElemSet covered(sv.order());
            for (auto [p, q] : mc.pairs) {
              Mask pa_qb = 0;
              for (Elem u = 0; u < n; ++u) {
                if (A >> u & 1) pa_qb |= Mask(1) << m.at(p, u);
                if (B >> u & 1) pa_qb |= Mask(1) << m.at(q, u);
              }
              const Elem d = sv.encode(pa_qb, m.at(p, a));
              if (!J.test(d))
                return fail(m, name, "D element " + sv.label(d) + " outside S(A,a) n S(B,b)");
              covered |= s_principal_ideal(sv, d, Side::Left);
            }
            if (!(covered == J))
              return fail(m, name,
                          "D does not generate S(A,a) n S(B,b) for a=" + m.label(a) +
                              " b=" + m.label(b) + " A=" + std::to_string(A) +
                              " B=" + std::to_string(B));
            if (B == full_mask(n)) break;
          }
          if (A == full_mask(n)) break;
        }
  }
  return {};
}

CheckOutcome chk_lcoord_cancel(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    const std::size_t n = m.order();
    if (n > 4) continue;
    // unique-solution hypothesis: xa = f, yb = f has at most one (x,y)
    bool unique = true;
    for (Elem a = 0; a < n && unique; ++a)
      for (Elem f = 0; f < n && unique; ++f) {
        int sols = 0;
        for (Elem x = 0; x < n; ++x)
          if (m.at(x, a) == f) ++sols;
        if (sols > 1) unique = false;
      }
    if (!unique) continue;
    const auto masks = ideal_masks(m, Side::Left);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const ElemSet inter = masks[a] & masks[b];
        if (!inter.any()) continue;
        std::vector<ElemPair> C;
        for (Elem g : ideal_generators(m, inter, Side::Left)) {
          ElemPair pq{kNoElem, kNoElem};
          for (Elem p = 0; p < n && pq.first == kNoElem; ++p)
            if (m.at(p, a) == g)
              for (Elem q = 0; q < n; ++q)
                if (m.at(q, b) == g) {
                  pq = {p, q};
                  break;
                }
          C.push_back(pq);
        }
        for (Mask A = 0; A <= full_mask(n); ++A) {
          for (Mask B = 0; B <= full_mask(n); ++B) {
            CoordSystem cs{a, b, mask_to_set(n, A), mask_to_set(n, B), C};
            const auto res = coordinate_system_check(m, cs);
            if (!res.ok)
              return fail(m, name,
                          "generator-derived system misses (x,y)=(" +
                              m.label(res.failing->first) + "," +
                              m.label(res.failing->second) + ") for a=" + m.label(a) +
                              " b=" + m.label(b));
            if (B == full_mask(n)) break;
          }
          if (A == full_mask(n)) break;
        }
      }
    if (is_group(m)) {
      const auto res = is_n_left_coordinated(m, 1);
      if (!res.verdict) return fail(m, name, "group not left 1-co-ordinated");
    }
  }
  return {};
}

CheckOutcome chk_coord_howson(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    const std::size_t n = m.order();
    if (n > 5) continue;
    const auto masks = ideal_masks(m, Side::Left);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const ElemSet empty(n);
        const auto mc = min_coordinate_system(m, a, b, empty, empty, 4);
        const ElemSet inter = masks[a] & masks[b];
        // {pa : (p,q) in C} generates Ma n Mb
        ElemSet covered(n);
        for (auto [p, q] : mc.pairs) covered |= masks[m.at(p, a)];
        if (!(covered == inter))
          return fail(m, name, "{pa} does not generate Ma n Mb for a=" + m.label(a) +
                                   " b=" + m.label(b));
        // size-1 iff the intersection is principal with generator pa = qb
        bool principal_pa = false;
        inter.for_each([&](Elem g) {
          if (principal_pa || !(masks[g] == inter)) return;
          for (Elem p = 0; p < n && !principal_pa; ++p)
            if (m.at(p, a) == g)
              for (Elem q = 0; q < n; ++q)
                if (m.at(q, b) == g) principal_pa = true;
        });
        const std::size_t expect = !inter.any() ? 0 : (principal_pa ? 1 : mc.size);
        if (mc.exact && mc.size != expect && (expect <= 1))
          return fail(m, name, "empty-set minimum is " + std::to_string(mc.size) +
                                   ", expected " + std::to_string(expect));
      }
  }
  return {};
}

CheckOutcome chk_fre_rabund(const VerifierConfig& cfg) {
  for (const auto& [name, m] : catalog_universe(cfg.catalog_order_max)) {
    if (!classify(m).right_abundant) continue;
    SView sv(m);
    const EqRelation lstar = relation_Lstar(m);
    const ElemSet idem = idempotents(m);
    for (Elem a = 0; a < m.order(); ++a) {
      Elem e = kNoElem;
      idem.for_each([&](Elem f) {
        if (e == kNoElem && lstar.same(a, f)) e = f;
      });
      if (e == kNoElem)
        return fail(m, name, "right abundant but no idempotent L*-related to " + m.label(a));
      for (Mask A = 0; A <= full_mask(m.order()); ++A) {
        if (!fre_rabund_check(sv, A, a, e))
          return fail(m, name, "singleton does not generate r((A," + m.label(a) +
                                   ")) for A=" + std::to_string(A));
        if (A == full_mask(m.order())) break;
      }
    }
  }
  return {};
}

CheckOutcome chk_skel_rabund(const VerifierConfig& cfg) {
  for (const auto& [name, m] : catalog_universe(cfg.catalog_order_max)) {
    if (!classify(m).right_abundant) continue;
    SView sv(m);
    const EqRelation lstar = relation_Lstar(m);
    const ElemSet idem = idempotents(m);
    for (Elem a = 0; a < m.order(); ++a) {
      Elem e = kNoElem;
      idem.for_each([&](Elem f) {
        if (e == kNoElem && lstar.same(a, f)) e = f;
      });
      for (Mask A = 0; A <= full_mask(m.order()); ++A) {
        const Elem sa = sv.encode(A, a);
        const Elem ge = sv.encode(preimage_mask(m, a, A), e);
        const Elem id0 = sv.encode(0, m.identity());
        const EqRelation r = right_annihilator(sv, sa);
        const std::vector<ElemPair> w{{id0, ge}};
        for (Elem x = 0; x < sv.order(); ++x)
          for (Elem y = 0; y < sv.order(); ++y) {
            if (!r.same(x, y) || x == y) continue;
            // length-2 witness with the fixed skeleton (id, ge), (ge, id)
            WSequence ws{x, y, Side::Right, {{id0, ge, x}, {ge, id0, y}}};
            if (!replay_w_sequence(sv, w, ws))
              return fail(m, name, "fixed-skeleton witness fails for " + sv.label(x) +
                                       " ~ " + sv.label(y) + " in r((A," + m.label(a) + "))");
          }
        if (A == full_mask(m.order())) break;
      }
    }
  }
  return {};
}

CheckOutcome chk_rcanc(const VerifierConfig& cfg) {
  for (const auto& [name, m] : group_universe()) {
    if (m.order() > 4) continue;
    SView sv(m);
    for (Elem a = 0; a < m.order(); ++a)
      for (Mask A = 0; A <= full_mask(m.order()); ++A) {
        if (!rcanc_check(sv, A, a))
          return fail(m, name, "singleton does not generate l((A," + m.label(a) +
                                   ")) for A=" + std::to_string(A));
        if (A == full_mask(m.order())) break;
      }
    (void)cfg;
  }
  return {};
}

CheckOutcome chk_skel_rcanc(const VerifierConfig& cfg) {
  for (const auto& [name, m] : group_universe()) {
    if (m.order() > 4) continue;
    SView sv(m);
    const Elem id0 = sv.encode(0, m.identity());
    for (Elem a = 0; a < m.order(); ++a)
      for (Mask A = 0; A <= full_mask(m.order()); ++A) {
        const Elem ga = sv.encode(A, m.identity());
        const EqRelation l = left_annihilator(sv, sv.encode(A, a));
        const std::vector<ElemPair> w{{id0, ga}};
        for (Elem x = 0; x < sv.order(); ++x)
          for (Elem y = 0; y < sv.order(); ++y) {
            if (!l.same(x, y) || x == y) continue;
            WSequence ws{x, y, Side::Left, {{id0, ga, x}, {ga, id0, y}}};
            if (!replay_w_sequence(sv, w, ws))
              return fail(m, name, "fixed-skeleton witness fails for " + sv.label(x) +
                                       " ~ " + sv.label(y) + " in l((A," + m.label(a) + "))");
          }
        if (A == full_mask(m.order())) break;
      }
    (void)cfg;
  }
  return {};
}

CheckOutcome chk_fountain(const VerifierConfig&) {
  const FiniteMonoid m = make_fountain(make_cyclic_group(2));
  // indices: G = {0=1, 1=g}, x = 2, xg = 3, x^2 = 4, x^2 g = 5, x^3 = 6, x^4 = 7
  const std::vector<Elem> G{0, 1};
  auto closure_is = [&](std::vector<ElemPair> w, Elem a) {
    return congruence_closure(m, w, RelKind::RightCongruence) == right_annihilator(m, a);
  };
  for (Elem g : G)
    if (!right_annihilator(m, g).is_identity())
      return fail(m, "fountainZ2", "r(g) is not the identity relation");
  std::vector<ElemPair> rxg, rx2g, rx3;
  for (Elem h : G)
    for (Elem k : G) {
      rxg.emplace_back(4 + h, 4 + k);   // (x^2 h, x^2 k)
      rx2g.emplace_back(2 + h, 2 + k);  // (x h, x k)
      rx3.emplace_back(h, k);           // (h, k)
    }
  rxg.emplace_back(6, 7);   // (x^3, x^4)
  rx2g.emplace_back(4, 7);  // (x^2, x^4)
  rx3.emplace_back(2, 7);   // (x, x^4)
  for (Elem a : {Elem(2), Elem(3)})
    if (!closure_is(rxg, a)) return fail(m, "fountainZ2", "r(x g) generating set fails");
  for (Elem a : {Elem(4), Elem(5)})
    if (!closure_is(rx2g, a)) return fail(m, "fountainZ2", "r(x^2 g) generating set fails");
  if (!closure_is(rx3, 6)) return fail(m, "fountainZ2", "r(x^3) generating set fails");
  if (!closure_is({{0, 7}}, 7)) return fail(m, "fountainZ2", "r(x^4) generating set fails");
  return {};
}

CheckOutcome chk_fountain_obstruct(const VerifierConfig&) {
  const FiniteMonoid m = make_fountain(make_cyclic_group(2));
  const Elem x = 2;
  // right-invertible p with xp = xq forces p = q
  for (Elem p = 0; p < m.order(); ++p) {
    bool rinv = false;
    for (Elem w = 0; w < m.order(); ++w) rinv = rinv || m.at(p, w) == 0;
    if (!rinv) continue;
    for (Elem q = 0; q < m.order(); ++q)
      if (m.at(x, p) == m.at(x, q) && p != q)
        return fail(m, "fountainZ2", "right-invertible cancellation fails");
  }
  // distinct u, v in x^2 G with xu = xv
  if (!(m.at(x, 4) == m.at(x, 5) && m.at(x, 4) == 6))
    return fail(m, "fountainZ2", "x u = x^3 = x v witness missing in x^2 G");
  return {};
}

CheckOutcome chk_easyseq(const VerifierConfig& cfg) {
  for (const auto& [name, m] : joint_universe(cfg)) {
    if (m.order() > 3) continue;
    SView sv(m);
    for (Elem a = 0; a < m.order(); ++a) {
      const auto X = min_generators_congruence(m, right_annihilator(m, a), Side::Right);
      for (Mask A = 0; A <= full_mask(m.order()); ++A) {
        const Mask pre = preimage_mask(m, a, A);
        std::vector<ElemPair> Y{{sv.encode(0, 0), sv.encode(pre, 0)},
                                {sv.encode(pre, 0), sv.encode(0, 0)}};
        for (auto [p, q] : X.generators)
          Y.emplace_back(sv.encode(pre, p), sv.encode(pre, q));
        const EqRelation cl = congruence_closure(sv, Y, RelKind::RightCongruence);
        const EqRelation r = right_annihilator(sv, sv.encode(A, a));
        for (Elem s = 0; s < sv.order(); ++s)
          for (Elem t = 0; t < sv.order(); ++t) {
            const SElem ds = sv.decode(s), dt = sv.decode(t);
            if ((ds.subset & ~pre) || (dt.subset & ~pre)) continue;
            if (r.same(s, t) && !cl.same(s, t))
              return fail(m, name, "Y-set misses restricted pair " + sv.label(s) +
                                       " ~ " + sv.label(t) + " for a=" + m.label(a) +
                                       " A=" + std::to_string(A));
          }
        if (A == full_mask(m.order())) break;
      }
    }
  }
  return {};
}

CheckOutcome chk_chain_coord(const VerifierConfig&) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const FiniteMonoid m = make_chain_semilattice(k);
    // larger index = lower in the chain; index 0 is the top
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b) {
        std::vector<ElemPair> C;
        if (a == b)
          C = {{0, 0}};
        else if (a > b)  // a strictly below b
          C = {{0, a}, {a, a}};
        else
          C = {{b, 0}, {b, b}};
        for (Mask A = 0; A <= full_mask(k); ++A) {
          for (Mask B = 0; B <= full_mask(k); ++B) {
            CoordSystem cs{a, b, mask_to_set(k, A), mask_to_set(k, B), C};
            const auto res = coordinate_system_check(m, cs);
            if (!res.ok)
              return fail(m, "chain" + std::to_string(k),
                          "case system misses (x,y)=(" + m.label(res.failing->first) +
                              "," + m.label(res.failing->second) + ") for a=" +
                              m.label(a) + " b=" + m.label(b) + " A=" +
                              std::to_string(A) + " B=" + std::to_string(B));
            if (B == full_mask(k)) break;
          }
          if (A == full_mask(k)) break;
        }
      }
  }
  return {};
}

CheckOutcome chk_dstack_coord(const VerifierConfig&) {
  std::size_t prev = 0;
  for (std::size_t k = 0; k <= 2; ++k) {
    const FiniteMonoid m = make_diamond_stack(k);
    ElemSet one(m.order());
    one.set(0);  // {1}
    // labels: identity at 0, then D_0 E_0 F_0 G_0 D_1 ...
    const Elem e0 = 2, f0 = 3;
    const auto mc = min_coordinate_system(m, e0, f0, one, one, 8);
    if (!mc.exact)
      return fail(m, "dstack" + std::to_string(k), "minimum not certified");
    if (mc.size <= prev)
      return fail(m, "dstack" + std::to_string(k),
                  "minimum " + std::to_string(mc.size) + " not above previous " +
                      std::to_string(prev));
    prev = mc.size;
  }
  return {};
}

CheckOutcome chk_gen_witness(const VerifierConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (const auto& [name, m] : catalog_universe(cfg.catalog_order_max)) {
    const std::size_t n = m.order();
    std::uniform_int_distribution<Elem> el(0, static_cast<Elem>(n - 1));
    for (Side side : {Side::Right, Side::Left}) {
      const RelKind kind =
          side == Side::Right ? RelKind::RightCongruence : RelKind::LeftCongruence;
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<ElemPair> w;
        const int sz = 1 + int(rng() % 3);
        for (int i = 0; i < sz; ++i) w.emplace_back(el(rng), el(rng));
        const EqRelation cl = congruence_closure(m, w, kind);
        for (int probe = 0; probe < 40; ++probe) {
          const Elem x = el(rng), y = el(rng);
          const auto ws = find_w_sequence(m, w, side, x, y);
          if (cl.same(x, y)) {
            if (!ws || !replay_w_sequence(m, w, *ws))
              return fail(m, name, "related pair has no replayable witness");
          } else if (ws) {
            return fail(m, name, "witness found for unrelated pair");
          }
        }
      }
    }
  }
  return {};
}

CheckOutcome chk_wcoh_report(const VerifierConfig& cfg) {
  for (const auto& [name, m] : catalog_universe(cfg.catalog_order_max)) {
    const WeakCoherenceReport rep = weak_coherence_report(m);
    if (!rep.right_ideal_howson || !rep.left_ideal_howson ||
        !rep.finitely_right_equated || !rep.finitely_left_equated)
      return fail(m, name, "finite monoid reported non-coherent");
    for (const auto& st : rep.annihilators) {
      if (congruence_closure(m, st.right.generators, RelKind::RightCongruence) !=
          right_annihilator(m, st.a))
        return fail(m, name, "reported generators of r(" + m.label(st.a) + ") fail");
      if (congruence_closure(m, st.left.generators, RelKind::LeftCongruence) !=
          left_annihilator(m, st.a))
        return fail(m, name, "reported generators of l(" + m.label(st.a) + ") fail");
    }
  }
  return {};
}

CheckOutcome chk_eample_eeq(const VerifierConfig& cfg) {
  for (const auto& [name, m] : catalog_universe(cfg.catalog_order_max)) {
    const ElemSet idem = idempotents(m);
    const auto ie = idem.elems();
    if (ie.size() > 6) continue;
    for (Mask sub = 1; sub < (Mask(1) << ie.size()); ++sub) {
      ElemSet E(m.order());
      for (std::size_t i = 0; i < ie.size(); ++i)
        if (sub >> i & 1) E.set(ie[i]);
      if (semilattice_violation(m, E)) continue;
      ClassificationReport r;
      try {
        r = classify(m, E);
      } catch (const ValidationError&) {
        continue;
      }
      if (r.right_ample && E != idem)
        return fail(m, name, "right E-ample with E a proper subset of E(M)");
    }
  }
  return {};
}

CheckOutcome chk_labund_obstruct(const VerifierConfig&) {
  for (std::size_t k = 1; k <= 2; ++k) {
    const FiniteMonoid m = make_truncated_presented_semilattice(k);
    // locate the named generators by label
    auto find = [&](const std::string& l) {
      for (Elem x = 0; x < m.order(); ++x)
        if (m.label(x) == l) return x;
      return kNoElem;
    };
    const Elem a = find("a");
    const EqRelation la = left_annihilator(m, a);
    const auto rmasks = ideal_masks(m, Side::Right);
    std::size_t good_pairs = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Elem b = find("b" + std::to_string(i)), c = find("c" + std::to_string(i));
      if (a == kNoElem || b == kNoElem || c == kNoElem)
        return fail(m, "psl" + std::to_string(k), "generator labels missing");
      if (!la.same(b, c))
        return fail(m, "psl" + std::to_string(k), "b_i a != c_i a");
      // b_i indecomposable: uv = b_i forces b_i in {u, v}
      for (Elem u = 0; u < m.order(); ++u)
        for (Elem v = 0; v < m.order(); ++v)
          if (m.at(u, v) == b && u != b && v != b)
            return fail(m, "psl" + std::to_string(k), "b_i decomposes");
      if (rmasks[b].test(c))
        return fail(m, "psl" + std::to_string(k), "c_i is R-below b_i");
      ++good_pairs;
    }
    if (good_pairs != k)
      return fail(m, "psl" + std::to_string(k), "missing obstruction pairs");
  }
  return {};
}

CheckOutcome chk_lcm_group(const VerifierConfig&) {
  for (const auto& [name, m] : group_universe()) {
    if (m.order() > 4) continue;
    SView sv(m);
    if (!is_principally_ideal_howson(sv, Side::Left).verdict)
      return fail(m, name, "S(group) not principally left ideal Howson");
    const auto pred = s_predicted_generators(sv);
    if (pred.l_confirmed != pred.l_applicable || pred.l_applicable == 0)
      return fail(m, name, "singleton left-annihilator generators not confirmed");
  }
  return {};
}

CheckOutcome chk_skel_probe(const VerifierConfig& cfg) {
  // probe: on small non-cancellative bases, the minimum generating sets of
  // l((A,a)) found by search always admit replayable witnesses
  for (const auto& [name, m] : catalog_universe(std::min<std::size_t>(cfg.catalog_order_max, 3))) {
    SView sv(m);
    for (Elem s = 0; s < sv.order(); ++s) {
      const EqRelation l = left_annihilator(sv, s);
      const auto mg = min_generators_congruence(sv, l, Side::Left, 32, 1);
      if (congruence_closure(sv, mg.generators, RelKind::LeftCongruence) != l)
        return fail(m, name, "search generators of l(" + sv.label(s) + ") fail");
      for (Elem x = 0; x < sv.order(); ++x) {
        const Elem y = l.rep(x);
        const auto ws = find_w_sequence(sv, mg.generators, Side::Left, x, y);
        if (!ws || !replay_w_sequence(sv, mg.generators, *ws))
          return fail(m, name, "no replayable witness inside l(" + sv.label(s) + ")");
      }
    }
  }
  return {};
}

CheckOutcome chk_enum_complete(const VerifierConfig&) {
  static const std::size_t expected[] = {1, 2, 7};  // frozen fixtures
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ms = enumerate_monoids(n);
    if (ms.size() != expected[n - 1])
      return CheckOutcome{"order " + std::to_string(n) + ": got " +
                              std::to_string(ms.size()) + ", expected " +
                              std::to_string(expected[n - 1]),
                          false, std::nullopt};
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (isomorphic(ms[i], ms[j]))
          return fail(ms[i], "enum" + std::to_string(n), "duplicate isomorphism class");
  }
  return {};
}

}  // namespace

const std::vector<CheckDef>& check_manifest() {
  static const std::vector<CheckDef> defs = {
      {"SPROD-1", "S(M) is an associative monoid with identity (0,1) and retract M",
       "§1 product definition", "enumerated <=3 + catalog <=5", chk_sprod},
      {"SREG-1", "E(S(M)) = {(A,e): e in A-hat}; semilattice iff M unipotent",
       "lem:Sreg(1)", "enumerated <=3 + catalog <=5", chk_sreg1},
      {"SREG-2", "S(M) regular iff M group; groups give proper inverse with the stated R/L/sigma",
       "lem:Sreg(2)", "enumerated <=3 + catalog <=5 + groups", chk_sreg2},
      {"RREL-1", "(A,a) R* (B,b) iff A=B and a R* b", "prop:Rrel(1)",
       "enumerated <=3 + catalog <=5, all S(M) pairs", chk_rrel1},
      {"RREL-2", "(A,a) R~ (B,b) iff A=B and a R~_{A-hat} b", "prop:Rrel(2)",
       "enumerated <=3 + catalog <=5, all S(M) pairs", chk_rrel2},
      {"RREL-3", "(A,a) R~_E (B,b) iff A=B", "prop:Rrel(3)",
       "enumerated <=3 + catalog <=5, all S(M) pairs", chk_rrel3},
      {"RREL-4", "R* = R~_E in S(M) iff M right cancellative", "prop:Rrel(4)",
       "enumerated <=3 + catalog <=5", chk_rrel4},
      {"RREL-5", "S(M) left abundant iff every (A,a) has an idempotent e in A-hat with a R* e",
       "prop:Rrel(5)", "enumerated <=3 + catalog <=5", chk_rrel5},
      {"RREL-6", "S(M) is proper left E-restriction; left E-ample iff M right cancellative",
       "prop:Rrel(6)", "enumerated <=3 + catalog <=5", chk_rrel6},
      {"LREL-1", "(A,a) L~ (B,b) iff a^-1 A = b^-1 B and a L~ b", "prop:Lrel(1)",
       "enumerated <=3 + catalog <=5, all S(M) pairs", chk_lrel1},
      {"LREL-2", "(A,a) L* (B,b) iff a^-1 A = b^-1 B and a L* b", "prop:Lrel(2)",
       "enumerated <=3 + catalog <=5, all S(M) pairs", chk_lrel2},
      {"LREL-3", "(A,a) L~_E (B,b) iff a^-1 A = b^-1 B", "prop:Lrel(3)",
       "enumerated <=3 + catalog <=5, all S(M) pairs", chk_lrel3},
      {"LREL-4", "L* = L~_E in S(M) iff M left cancellative", "prop:Lrel(4)",
       "enumerated <=3 + catalog <=5", chk_lrel4},
      {"LREL-5", "S(M) right abundant iff M right abundant", "prop:Lrel(5)",
       "enumerated <=3 + catalog <=5", chk_lrel5},
      {"LREL-6", "each L~_E class has one idempotent of E; right E-Ehresmann/adequate iff M left cancellative",
       "prop:Lrel(6)", "enumerated <=3 + catalog <=5", chk_lrel6},
      {"LREL-7", "S(M) right ample iff M is a group", "prop:Lrel(7)",
       "enumerated <=3 + catalog <=5", chk_lrel7},
      {"INCL-1", "X <= a^-1(aX); a(a^-1 X) = aM n X; equalities iff left cancellative / group",
       "rem:inclusions", "enumerated <=3 + catalog <=5, all subsets", chk_incl},
      {"FIN-R", "R((M,1),(M,1)) = {((D,d),(E,d))}", "prop:finite (R)",
       "bases of order <=4", chk_fin_r},
      {"FIN-L", "L((M,1),(M,1)) = {((D,d),(E,d)): D u dM = E u dM}", "prop:finite (L)",
       "bases of order <=4", chk_fin_l},
      {"CHAIN-RGEN-MONO", "minimum generators of R((M,1),(M,1)) non-decreasing on chains",
       "prop:finite (derived)", "chains of order 2..5", chk_chain_rgen},
      {"SRIH-EQUIV", "S(M) principally right ideal Howson iff M is", "thm:srih",
       "enumerated <=3 + catalog <=5", chk_srih_equiv},
      {"SRIH-IMPL", "principal => strong => plain ideal Howson", "def:srih",
       "enumerated <=3 + catalog <=5", chk_srih_impl},
      {"SRIH-K", "K = {(A u B u C, u_i): C <= L_i} generates (A,a)S n (B,b)S",
       "thm:srih (K-set)", "order <=3 exhaustive; order 4..5 sampled", chk_srih_k},
      {"LCOORD-EQUIV", "S(M) principally left ideal Howson iff M left 1-co-ordinated",
       "prop:leftcoord", "order <=3 exhaustive; order 4 sampled", chk_lcoord_equiv},
      {"LCOORD-D", "D = {(pA u qB, pa)} generates S(A,a) n S(B,b)", "prop:leftcoord (D-set)",
       "bases of order <=3, all (a,b,A,B)", chk_lcoord_d},
      {"LCOORD-CANCEL", "under unique solutions, ideal generators induce co-ordinate systems",
       "rem:leftcoordcancel", "unique-solution monoids of order <=4", chk_lcoord_cancel},
      {"COORD-HOWSON", "{pa: (p,q) in C} generates Ma n Mb", "rem:leftcoord(2)",
       "enumerated <=3 + catalog <=5", chk_coord_howson},
      {"FRE-RABUND", "r((A,a)) = closure of {((0,1),(a^-1 A,e))} when a L* e = e^2",
       "lem:FRErabund", "right-abundant catalog <=5, all (A,a)", chk_fre_rabund},
      {"SKEL-RABUND", "witnesses in r((A,a)) have length <=2 and one skeleton",
       "lem:FRErabund (skeleton)", "right-abundant catalog <=5, all pairs", chk_skel_rabund},
      {"RCANC", "l((A,a)) = closure of {((A,1),(0,1))} for right cancellative M",
       "prop:rcanc", "groups of order <=4, all (A,a)", chk_rcanc},
      {"SKEL-RCANC", "witnesses in l((A,a)) have length <=2 and one skeleton",
       "prop:rcanc (skeleton)", "groups of order <=4, all pairs", chk_skel_rcanc},
      {"FOUNTAIN-R-ANNIH", "the four displayed generating sets produce the r(.) congruences",
       "Fountain example", "Fountain(Z2)", chk_fountain},
      {"FOUNTAIN-OBSTRUCT", "Fountain(Z2) satisfies the finite shadow of the obstruction hypotheses",
       "lem:FREobstruct (finite shadow)", "Fountain(Z2)", chk_fountain_obstruct},
      {"EASYSEQ", "the Y-set generates all pairs with U,V <= a^-1 A in r((A,a))",
       "rem:easyseq", "bases of order <=3, all (A,a)", chk_easyseq},
      {"CHAIN-COORD", "the case-defined C is a co-ordinate system on finite chains",
       "chain example", "chains of order 2..5, all (a,b,A,B)", chk_chain_coord},
      {"DSTACK-COORD", "minimum co-ordinate system size grows along the diamond stack",
       "ex:notstrongleft (finite shadow)", "diamond stacks k = 0,1,2", chk_dstack_coord},
      {"GEN-WITNESS", "congruence membership coincides with W-sequence existence",
       "prop:gen", "catalog <=5, seeded random W", chk_gen_witness},
      {"WCOH-REPORT", "weak-coherence report generators reproduce every annihilator",
       "thm:weakcoherent", "catalog <=5", chk_wcoh_report},
      {"EAMPLE-EEQ", "right E-ample forces E = E(M)", "§2.2 remark on E-ample",
       "catalog <=5, all sub-semilattices E", chk_eample_eeq},
      {"LABUND-OBSTRUCT", "psl(k) holds k obstruction pairs (b_i, c_i) in l(a)",
       "ex:labund / lem:FLEobstruct (finite shadow)", "psl(1), psl(2)", chk_labund_obstruct},
      {"LCM-GROUP", "left LCM (group) bases give weakly left coherent S(M)",
       "cor:LCM (group case)", "groups of order <=4", chk_lcm_group},
      {"SKEL-PROBE", "searched generating sets of l((A,a)) admit replayable witnesses",
       "qn:skeletons (probe)", "catalog <=3", chk_skel_probe},
      {"ENUM-COMPLETE", "enumeration counts 1, 2, 7 for orders 1..3; classes distinct",
       "artifact plumbing", "orders 1..3", chk_enum_complete},
  };
  return defs;
}

std::string manifest_hash() {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& d : check_manifest())
    for (const std::string* s : {&d.id, &d.anchor})
      for (char c : *s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
      }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

VerdictReport run_suite(const VerifierConfig& config) {
  const auto& defs = check_manifest();
  std::vector<std::size_t> selected;
  if (config.check_ids.empty()) {
    for (std::size_t i = 0; i < defs.size(); ++i) selected.push_back(i);
  } else {
    for (const auto& id : config.check_ids) {
      bool found = false;
      for (std::size_t i = 0; i < defs.size(); ++i)
        if (defs[i].id == id) {
          selected.push_back(i);
          found = true;
        }
      if (!found) throw ValidationError("run_suite: unknown check id '" + id + "'");
    }
  }

  VerdictReport report;
  report.seed = config.seed;
  report.results.resize(selected.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const CheckDef& def = defs[selected[k]];
    CheckResult res;
    res.id = def.id;
    res.universe = def.universe;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const CheckOutcome o = def.run(config);
      if (o.failure) {
        res.status = CheckResult::Status::Fail;
        res.counterexample = *o.failure;
        if (!config.artifact_dir.empty() && o.witness) {
          std::filesystem::create_directories(config.artifact_dir);
          res.counterexample_file = config.artifact_dir + "/" + def.id + ".mon";
          save_monoid_file(*o.witness, res.counterexample_file);
        }
      } else {
        res.status = o.sampled ? CheckResult::Status::SampledPass
                               : CheckResult::Status::Pass;
      }
    } catch (const std::exception& e) {
      res.status = CheckResult::Status::Error;
      res.counterexample = e.what();
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    report.results[k] = std::move(res);
  }
  for (const auto& r : report.results)
    if (r.status == CheckResult::Status::Fail || r.status == CheckResult::Status::Error)
      report.all_passed = false;
  return report;
}

std::string report_to_json(const VerdictReport& report) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["all_passed"] = report.all_passed;
  j["manifest_hash"] = manifest_hash();
  j["checks"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json c;
    c["check_id"] = r.id;
    switch (r.status) {
      case CheckResult::Status::Pass: c["status"] = "pass"; break;
      case CheckResult::Status::SampledPass: c["status"] = "sampled-pass"; break;
      case CheckResult::Status::Fail: c["status"] = "fail"; break;
      case CheckResult::Status::Error: c["status"] = "error"; break;
    }
    c["universe"] = r.universe;
    c["elapsed_ms"] = r.elapsed_ms;
    if (!r.counterexample.empty()) c["counterexample"] = r.counterexample;
    if (!r.counterexample_file.empty()) c["counterexample_file"] = r.counterexample_file;
    j["checks"].push_back(std::move(c));
  }
  return j.dump(2);
}

namespace {

using Predicate = bool (*)(const FiniteMonoid&);

bool pred_prih(const FiniteMonoid& m) {
  return is_principally_ideal_howson(m, Side::Right).verdict;
}
bool pred_plih(const FiniteMonoid& m) {
  return is_principally_ideal_howson(m, Side::Left).verdict;
}
bool pred_1coord(const FiniteMonoid& m) { return is_n_left_coordinated(m, 1).verdict; }
bool pred_sreg(const FiniteMonoid& m) {
  SView sv(m);
  const auto wit = regular_witnesses(sv);
  const bool regular = std::find(wit.begin(), wit.end(), kNoElem) == wit.end();
  return regular == is_group(m);
}
bool pred_esemi(const FiniteMonoid& m) {
  SView sv(m);
  const bool semilattice = !semilattice_violation(sv, s_idempotents_formula(sv));
  return semilattice == (idempotents(m).count() == 1);
}
bool pred_srih_transfer(const FiniteMonoid& m) {
  SView sv(m);
  return is_principally_ideal_howson(m, Side::Right).verdict ==
         is_principally_ideal_howson(sv, Side::Right).verdict;
}

const std::vector<std::pair<std::string, Predicate>>& predicates() {
  static const std::vector<std::pair<std::string, Predicate>> p = {
      {"principally-right-ideal-howson", pred_prih},
      {"principally-left-ideal-howson", pred_plih},
      {"left-1-coordinated", pred_1coord},
      {"s-regular-iff-group", pred_sreg},
      {"e-semilattice-iff-unipotent", pred_esemi},
      {"srih-transfer", pred_srih_transfer},
  };
  return p;
}

}  // namespace

std::vector<std::string> predicate_ids() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : predicates()) out.push_back(name);
  return out;
}

std::optional<SearchHit> search_counterexample(const std::string& predicate_id,
                                               std::size_t order_min,
                                               std::size_t order_max) {
  Predicate fn = nullptr;
  for (const auto& [name, f] : predicates())
    if (name == predicate_id) fn = f;
  if (!fn) throw ValidationError("search_counterexample: unknown predicate '" +
                                 predicate_id + "'");
  for (std::size_t n = order_min; n <= order_max; ++n) {
    for (const auto& e : catalog_entries()) {
      const FiniteMonoid m = e.build();
      if (m.order() == n && !fn(m))
        return SearchHit{m, "catalog entry " + e.name + " of order " + std::to_string(n)};
    }
    for (const auto& m : enumerate_monoids(n))
      if (!fn(m))
        return SearchHit{m, "enumerated monoid of order " + std::to_string(n)};
  }
  return std::nullopt;
}

}  // namespace monoidkit

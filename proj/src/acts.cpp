#include "monoidkit/acts.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace monoidkit {

namespace {

struct Dsu {
  std::vector<Elem> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (Elem i = 0; i < n; ++i) parent[i] = i;
  }
  Elem find(Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);  // keep smaller index as root
    parent[a] = b;
    return true;
  }
};

Elem act_pairwise(const MonoidView& v, Elem x, Elem t, Side side) {
  return side == Side::Right ? v.product(x, t) : v.product(t, x);
}

}  // namespace

IdealSet principal_ideal(const MonoidView& v, Elem a, Side side) {
  const std::size_t n = v.order();
  ElemSet carrier(n);
  for (Elem t = 0; t < n; ++t) carrier.set(act_pairwise(v, a, t, side));
  return IdealSet{side, std::move(carrier), {a}};
}

std::vector<Elem> ideal_generators(const MonoidView& v, const ElemSet& carrier, Side side) {
  const std::size_t n = v.order();
  const auto elems = carrier.elems();
  if (elems.empty()) return {};
  // u <= w iff u lies in the principal ideal of w
  std::vector<ElemSet> below(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    below[i] = principal_ideal(v, elems[i], side).carrier;
  std::vector<Elem> gens;
  std::vector<char> dominated(elems.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      // strict domination: i below j but j not below i; ties keep the
      // smaller index as the class representative
      const bool i_le_j = below[j].test(elems[i]);
      const bool j_le_i = below[i].test(elems[j]);
      if (i_le_j && (!j_le_i || j < i)) {
        dominated[i] = 1;
        break;
      }
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!dominated[i]) gens.push_back(elems[i]);
  return gens;
}

IdealSet ideal_intersection(const MonoidView& v, Elem a, Elem b, Side side) {
  ElemSet carrier = principal_ideal(v, a, side).carrier & principal_ideal(v, b, side).carrier;
  std::vector<Elem> gens = ideal_generators(v, carrier, side);
  return IdealSet{side, std::move(carrier), std::move(gens)};
}

void PairSet::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool PairSet::contains(ElemPair p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

PairSet subact_RL(const MonoidView& v, Elem a, Elem b, Side side) {
  const std::size_t n = v.order();
  PairSet out;
  for (Elem u = 0; u < n; ++u)
    for (Elem w = 0; w < n; ++w) {
      const bool in = side == Side::Right ? v.product(a, u) == v.product(b, w)
                                          : v.product(u, a) == v.product(w, b);
      if (in) out.add(u, w);
    }
  out.normalize();
  return out;
}

namespace {

ElemPair pair_act(const MonoidView& v, ElemPair p, Elem t, Side side) {
  return side == Side::Right
             ? ElemPair{v.product(p.first, t), v.product(p.second, t)}
             : ElemPair{v.product(t, p.first), v.product(t, p.second)};
}

/// Indices of a minimum generating set: one representative per source
/// component of the divisibility preorder.
std::vector<std::size_t> source_components(const MonoidView& v, const PairSet& p,
                                           Side side) {
  const std::size_t m = p.pairs.size();
  const std::size_t n = v.order();
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(m * 2);
  auto key = [n](ElemPair q) {
    return static_cast<std::uint64_t>(q.first) * n + q.second;
  };
  for (std::size_t i = 0; i < m; ++i) index.emplace(key(p.pairs[i]), i);

  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<char> seen(m, 0);
    for (Elem t = 0; t < n; ++t) {
      const ElemPair q = pair_act(v, p.pairs[i], t, side);
      auto it = index.find(key(q));
      if (it == index.end())
        throw ValidationError("not a subact: pair (" + std::to_string(p.pairs[i].first) +
                              "," + std::to_string(p.pairs[i].second) + ") escapes under t=" +
                              std::to_string(t));
      if (!seen[it->second]) {
        seen[it->second] = 1;
        if (it->second != i) adj[i].push_back(it->second);
      }
    }
  }

  // iterative Tarjan SCC
  std::vector<int> comp(m, -1), low(m), num(m, -1);
  std::vector<std::size_t> stk;
  std::vector<char> on_stk(m, 0);
  int counter = 0, ncomp = 0;
  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  for (std::size_t s = 0; s < m; ++s) {
    if (num[s] != -1) continue;
    std::vector<Frame> call{{s, 0}};
    num[s] = low[s] = counter++;
    stk.push_back(s);
    on_stk[s] = 1;
    while (!call.empty()) {
      auto& fr = call.back();
      if (fr.edge < adj[fr.node].size()) {
        std::size_t w = adj[fr.node][fr.edge++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on_stk[w] = 1;
          call.push_back({w, 0});
        } else if (on_stk[w]) {
          low[fr.node] = std::min(low[fr.node], num[w]);
        }
      } else {
        if (low[fr.node] == num[fr.node]) {
          while (true) {
            std::size_t w = stk.back();
            stk.pop_back();
            on_stk[w] = 0;
            comp[w] = ncomp;
            if (w == fr.node) break;
          }
          ++ncomp;
        }
        std::size_t done = fr.node;
        call.pop_back();
        if (!call.empty())
          low[call.back().node] = std::min(low[call.back().node], low[done]);
      }
    }
  }

  std::vector<char> has_external_in(ncomp, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : adj[i])
      if (comp[i] != comp[j]) has_external_in[comp[j]] = 1;

  std::vector<std::size_t> rep(ncomp, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (rep[comp[i]] == SIZE_MAX || p.pairs[i] < p.pairs[rep[comp[i]]]) rep[comp[i]] = i;
  std::vector<std::size_t> out;
  for (int c = 0; c < ncomp; ++c)
    if (!has_external_in[c]) out.push_back(rep[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ElemPair> subact_generators(const MonoidView& v, const PairSet& p, Side side) {
  std::vector<ElemPair> out;
  for (std::size_t i : source_components(v, p, side)) out.push_back(p.pairs[i]);
  return out;
}

std::size_t subact_min_generators(const MonoidView& v, const PairSet& p, Side side) {
  return source_components(v, p, side).size();
}

bool subact_divides(const MonoidView& v, ElemPair g, ElemPair target, Side side) {
  const std::size_t n = v.order();
  for (Elem t = 0; t < n; ++t)
    if (pair_act(v, g, t, side) == target) return true;
  return false;
}

EqRelation congruence_closure(const MonoidView& v, std::span<const ElemPair> w,
                              RelKind kind) {
  const std::size_t n = v.order();
  Dsu dsu(n);
  std::vector<ElemPair> worklist;
  auto unite = [&](Elem a, Elem b) {
    if (dsu.unite(a, b)) worklist.emplace_back(a, b);
  };
  for (auto [a, b] : w) unite(a, b);
  while (!worklist.empty()) {
    auto [a, b] = worklist.back();
    worklist.pop_back();
    for (Elem t = 0; t < n; ++t) {
      if (kind == RelKind::RightCongruence || kind == RelKind::TwoSided)
        unite(v.product(a, t), v.product(b, t));
      if (kind == RelKind::LeftCongruence || kind == RelKind::TwoSided)
        unite(v.product(t, a), v.product(t, b));
    }
  }
  std::vector<Elem> reps(n);
  for (Elem x = 0; x < n; ++x) reps[x] = dsu.find(x);
  return EqRelation(std::move(reps), kind);
}

std::optional<WSequence> find_w_sequence(const MonoidView& v,
                                         std::span<const ElemPair> w, Side side,
                                         Elem a, Elem b) {
  if (a == b) return WSequence{a, b, side, {}};
  const std::size_t n = v.order();
  std::vector<ElemPair> wfull(w.begin(), w.end());
  for (auto [c, d] : w) wfull.emplace_back(d, c);

  std::vector<Elem> prev(n, kNoElem);
  std::vector<WStep> via(n);
  std::queue<Elem> q;
  prev[a] = a;
  q.push(a);
  while (!q.empty()) {
    const Elem x = q.front();
    q.pop();
    for (auto [c, d] : wfull)
      for (Elem t = 0; t < n; ++t) {
        if (act_pairwise(v, c, t, side) != x) continue;
        const Elem y = act_pairwise(v, d, t, side);
        if (prev[y] != kNoElem) continue;
        prev[y] = x;
        via[y] = WStep{c, d, t};
        if (y == b) {
          WSequence ws{a, b, side, {}};
          for (Elem z = b; z != a; z = prev[z]) ws.steps.push_back(via[z]);
          std::reverse(ws.steps.begin(), ws.steps.end());
          return ws;
        }
        q.push(y);
      }
  }
  return std::nullopt;
}

bool replay_w_sequence(const MonoidView& v, std::span<const ElemPair> w,
                       const WSequence& ws) {
  auto in_w = [&](Elem c, Elem d) {
    for (auto [p, q] : w)
      if ((p == c && q == d) || (p == d && q == c)) return true;
    return false;
  };
  if (ws.steps.empty()) return ws.a == ws.b;
  Elem cur = ws.a;
  for (const auto& st : ws.steps) {
    if (!in_w(st.c, st.d)) return false;
    if (act_pairwise(v, st.c, st.t, ws.side) != cur) return false;
    cur = act_pairwise(v, st.d, st.t, ws.side);
  }
  return cur == ws.b;
}

std::vector<ElemPair> skeleton(const WSequence& ws) {
  std::vector<ElemPair> out;
  out.reserve(ws.steps.size());
  for (const auto& st : ws.steps) out.emplace_back(st.c, st.d);
  return out;
}

namespace {

/// Canonicalized orbit of a single generating pair; equal orbits generate
/// equal congruences, so this is a sound dedup fingerprint.
std::vector<ElemPair> pair_orbit_fingerprint(const MonoidView& v, ElemPair p, Side side) {
  const std::size_t n = v.order();
  std::vector<ElemPair> orbit;
  orbit.reserve(n);
  for (Elem t = 0; t < n; ++t) {
    ElemPair q = pair_act(v, p, t, side);
    if (q.first == q.second) continue;
    if (q.first > q.second) std::swap(q.first, q.second);
    orbit.push_back(q);
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace

MinGenResult min_generators_congruence(const MonoidView& v, const EqRelation& rel,
                                       Side side, std::size_t pool_cap,
                                       std::size_t size_cap) {
  if (!is_congruence(v, rel, side))
    throw ValidationError("min_generators_congruence: relation is not a " +
                          std::string(side_name(side)) + " congruence");
  MinGenResult res;
  if (rel.is_identity()) {
    res.exact = true;
    return res;
  }
  const RelKind kind =
      side == Side::Right ? RelKind::RightCongruence : RelKind::LeftCongruence;

  // candidate pool: same-class pairs, deduplicated by orbit fingerprint
  std::map<std::vector<ElemPair>, ElemPair> seen;
  std::vector<ElemPair> pool;
  for (const auto& cls : rel.classes())
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        ElemPair p{cls[i], cls[j]};
        auto [it, fresh] = seen.emplace(pair_orbit_fingerprint(v, p, side), p);
        if (fresh) pool.push_back(p);
      }

  auto closure_of = [&](std::span<const ElemPair> w) {
    return congruence_closure(v, w, kind);
  };

  if (pool.size() <= pool_cap && size_cap >= 1) {
    for (const auto& p : pool) {
      std::vector<ElemPair> w{p};
      if (closure_of(w) == rel) {
        res.exact = true;
        res.lower = res.upper = 1;
        res.generators = w;
        return res;
      }
    }
    if (size_cap >= 2) {
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          std::vector<ElemPair> w{pool[i], pool[j]};
          if (closure_of(w) == rel) {
            res.exact = true;
            res.lower = res.upper = 2;
            res.generators = std::move(w);
            return res;
          }
        }
      res.lower = 3;
    } else {
      res.lower = 2;
    }
  } else {
    res.lower = 1;
  }

  // greedy upper bound, then prune to irredundancy
  std::vector<ElemPair> chosen;
  EqRelation cur = EqRelation::identity(v.order(), kind);
  while (cur != rel) {
    std::size_t best = SIZE_MAX, best_classes = SIZE_MAX;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (cur.same(pool[i].first, pool[i].second)) continue;
      std::vector<ElemPair> w = chosen;
      w.push_back(pool[i]);
      std::size_t nc = closure_of(w).num_classes();
      if (nc < best_classes) {
        best_classes = nc;
        best = i;
      }
    }
    if (best == SIZE_MAX) break;  // cannot happen for a congruence
    chosen.push_back(pool[best]);
    cur = closure_of(chosen);
  }
  for (std::size_t i = 0; i < chosen.size();) {
    std::vector<ElemPair> w;
    for (std::size_t j = 0; j < chosen.size(); ++j)
      if (j != i) w.push_back(chosen[j]);
    if (closure_of(w) == rel)
      chosen = std::move(w);
    else
      ++i;
  }
  res.upper = chosen.size();
  res.generators = std::move(chosen);
  res.lower = std::min(res.lower, res.upper);
  return res;
}

bool s_divides(const SView& sv, Elem gen, Elem target, Side side) {
  const SElem g = sv.decode(gen), x = sv.decode(target);
  const FiniteMonoid& m = sv.base();
  const std::size_t n = m.order();
  if (side == Side::Right) {
    // (P,p)(Y,y) = (X,x): P subset X, X\P subset pM, x in pM
    if (g.subset & ~x.subset) return false;
    Mask p_ideal = 0;
    bool hits_x = false;
    for (Elem t = 0; t < n; ++t) {
      const Elem pt = m.at(g.elem, t);
      p_ideal |= Mask(1) << pt;
      if (pt == x.elem) hits_x = true;
    }
    return hits_x && !((x.subset & ~g.subset) & ~p_ideal);
  }
  // (T,t)(P,p) = (X,x): exists t with tp = x and tP subset X
  for (Elem t = 0; t < n; ++t)
    if (m.at(t, g.elem) == x.elem && !(sv.act(t, g.subset) & ~x.subset)) return true;
  return false;
}

ElemSet s_principal_ideal(const SView& sv, Elem g, Side side) {
  const std::size_t n = sv.order();
  ElemSet out(n);
  for (Elem t = 0; t < n; ++t)
    out.set(side == Side::Right ? sv.product(g, t) : sv.product(t, g));
  return out;
}

}  // namespace monoidkit

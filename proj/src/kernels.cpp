#include "monoidkit/kernels.hpp"

#include <map>

namespace monoidkit {

namespace {

std::vector<Elem> signature_for(const MonoidView& v, Elem a, Side side) {
  const std::size_t n = v.order();
  std::vector<Elem> prod(n), sig(n);
  for (Elem u = 0; u < n; ++u)
    prod[u] = side == Side::Right ? v.product(a, u) : v.product(u, a);
  std::vector<Elem> first(n, kNoElem);
  for (Elem u = 0; u < n; ++u) {
    if (first[prod[u]] == kNoElem) first[prod[u]] = u;
    sig[u] = first[prod[u]];
  }
  return sig;
}

std::vector<Elem> group_signatures(std::vector<std::vector<Elem>> sigs) {
  const std::size_t n = sigs.size();
  std::map<std::vector<Elem>, Elem> reps;
  std::vector<Elem> out(n);
  for (Elem a = 0; a < n; ++a) {
    auto [it, fresh] = reps.emplace(std::move(sigs[a]), a);
    out[a] = fresh ? a : it->second;
  }
  return out;
}

}  // namespace

std::vector<Elem> annihilator_signature(const MonoidView& v, Elem a, Side side) {
  return signature_for(v, a, side);
}

std::vector<ElemSet> ideal_masks(const MonoidView& v, Side side) {
  const std::size_t n = v.order();
  std::vector<ElemSet> out(n);
#pragma omp parallel for schedule(static)
  for (long long xi = 0; xi < static_cast<long long>(n); ++xi) {
    const Elem x = static_cast<Elem>(xi);
    ElemSet s(n);
    for (Elem t = 0; t < n; ++t)
      s.set(side == Side::Right ? v.product(x, t) : v.product(t, x));
    out[x] = std::move(s);
  }
  return out;
}

std::vector<Elem> star_partition(const MonoidView& v, Side side) {
  const std::size_t n = v.order();
  std::vector<std::vector<Elem>> sigs(n);
#pragma omp parallel for schedule(static)
  for (long long ai = 0; ai < static_cast<long long>(n); ++ai)
    sigs[ai] = signature_for(v, static_cast<Elem>(ai), side);
  return group_signatures(std::move(sigs));
}

ElemSet idempotent_set(const MonoidView& v) {
  const std::size_t n = v.order();
  std::vector<char> idem(n, 0);
#pragma omp parallel for schedule(static)
  for (long long xi = 0; xi < static_cast<long long>(n); ++xi) {
    const Elem x = static_cast<Elem>(xi);
    idem[x] = v.product(x, x) == x;
  }
  ElemSet s(n);
  for (Elem x = 0; x < n; ++x)
    if (idem[x]) s.set(x);
  return s;
}

std::vector<Elem> regular_witnesses(const MonoidView& v) {
  const std::size_t n = v.order();
  std::vector<Elem> out(n, kNoElem);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long xi = 0; xi < static_cast<long long>(n); ++xi) {
    const Elem x = static_cast<Elem>(xi);
    for (Elem y = 0; y < n; ++y)
      if (v.product(v.product(x, y), x) == x) {
        out[x] = y;
        break;
      }
  }
  return out;
}

namespace ref {

std::vector<ElemSet> ideal_masks(const MonoidView& v, Side side) {
  const std::size_t n = v.order();
  std::vector<ElemSet> out(n);
  for (Elem x = 0; x < n; ++x) {
    ElemSet s(n);
    for (Elem t = 0; t < n; ++t)
      s.set(side == Side::Right ? v.product(x, t) : v.product(t, x));
    out[x] = std::move(s);
  }
  return out;
}

std::vector<Elem> star_partition(const MonoidView& v, Side side) {
  // Pairwise definition check: a, b equivalent iff au = av <=> bu = bv
  // for all u, v (right case).
  const std::size_t n = v.order();
  std::vector<Elem> out(n, kNoElem);
  auto equivalent = [&](Elem a, Elem b) {
    for (Elem u = 0; u < n; ++u)
      for (Elem w = 0; w < n; ++w) {
        bool ea = side == Side::Right ? v.product(a, u) == v.product(a, w)
                                      : v.product(u, a) == v.product(w, a);
        bool eb = side == Side::Right ? v.product(b, u) == v.product(b, w)
                                      : v.product(u, b) == v.product(w, b);
        if (ea != eb) return false;
      }
    return true;
  };
  for (Elem a = 0; a < n; ++a) {
    if (out[a] != kNoElem) continue;
    out[a] = a;
    for (Elem b = a + 1; b < n; ++b)
      if (out[b] == kNoElem && equivalent(a, b)) out[b] = a;
  }
  return out;
}

ElemSet idempotent_set(const MonoidView& v) {
  const std::size_t n = v.order();
  ElemSet s(n);
  for (Elem x = 0; x < n; ++x)
    if (v.product(x, x) == x) s.set(x);
  return s;
}

std::vector<Elem> regular_witnesses(const MonoidView& v) {
  const std::size_t n = v.order();
  std::vector<Elem> out(n, kNoElem);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (v.product(v.product(x, y), x) == x) {
        out[x] = y;
        break;
      }
  return out;
}

}  // namespace ref

}  // namespace monoidkit

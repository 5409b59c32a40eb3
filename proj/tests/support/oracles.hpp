// Slow, obviously-correct reference implementations the fast code is
// tested against. Keep these naive on purpose.
#ifndef MONOIDKIT_TESTS_ORACLES_HPP
#define MONOIDKIT_TESTS_ORACLES_HPP

#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/relations.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit::oracle {

/// One-sided congruence closure by fixpoint over a full boolean relation
/// matrix: close under symmetry, transitivity, and one-sided translation
/// until nothing changes.
inline EqRelation naive_congruence_closure(const MonoidView& v,
                                           const std::vector<ElemPair>& w,
                                           RelKind kind) {
  const std::size_t n = v.order();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = 1;
  for (auto [a, b] : w) rel[a][b] = rel[b][a] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!rel[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (rel[b][c] && !rel[a][c]) rel[a][c] = rel[c][a] = changed = true;
        for (Elem t = 0; t < n; ++t) {
          Elem at, bt;
          if (kind == RelKind::LeftCongruence) {
            at = v.product(t, Elem(a));
            bt = v.product(t, Elem(b));
          } else {
            at = v.product(Elem(a), t);
            bt = v.product(Elem(b), t);
          }
          if (!rel[at][bt]) rel[at][bt] = rel[bt][at] = changed = true;
        }
      }
  }

  std::vector<Elem> reps(n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem r = Elem(x);
    for (std::size_t y = 0; y < x; ++y)
      if (rel[x][y]) {
        r = Elem(y);
        break;
      }
    reps[x] = r;
  }
  return EqRelation(std::move(reps), kind);
}

/// Every monoid of order n up to isomorphism, by trying all tables with
/// identity 0 and keeping one representative per isomorphism class.
/// Exponential; intended for n <= 3.
inline std::vector<FiniteMonoid> brute_force_monoids(std::size_t n) {
  std::vector<FiniteMonoid> found;
  if (n == 0) return found;
  const std::size_t free_cells = (n - 1) * (n - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < free_cells; ++i) total *= n;

  std::vector<Elem> t(n * n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) {
        t[i * n + j] = Elem(c % n);
        c /= n;
      }
    for (std::size_t i = 0; i < n; ++i) t[0 * n + i] = t[i * n + 0] = Elem(i);

    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a)
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t cc = 0; cc < n && assoc; ++cc)
          assoc = t[t[a * n + b] * n + cc] == t[a * n + t[b * n + cc]];
    if (!assoc) continue;

    FiniteMonoid m(n, t);
    bool fresh = true;
    for (const auto& prev : found)
      if (isomorphic(prev, m)) {
        fresh = false;
        break;
      }
    if (fresh) found.push_back(std::move(m));
  }
  return found;
}

}  // namespace monoidkit::oracle

#endif

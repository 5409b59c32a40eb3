#include <set>

#include "monoidkit/catalog.hpp"

namespace monoidkit {

namespace {

struct Enumerator {
  std::size_t n;
  std::vector<Elem> t;  // n*n, kNoElem = undetermined
  std::set<std::vector<Elem>>* out;
  std::size_t limit;

  Elem get(Elem a, Elem b) const { return t[a * n + b]; }

  /// Associativity of the partial table: only fully determined triples.
  bool consistent() const {
    for (Elem a = 1; a < n; ++a)
      for (Elem b = 1; b < n; ++b) {
        const Elem ab = get(a, b);
        if (ab == kNoElem) continue;
        for (Elem c = 1; c < n; ++c) {
          const Elem bc = get(b, c);
          if (bc == kNoElem) continue;
          const Elem l = get(ab, c), r = get(a, bc);
          if (l != kNoElem && r != kNoElem && l != r) return false;
        }
      }
    return true;
  }

  bool full() const { return out->size() >= limit && limit > 0; }

  void fill(std::size_t cell) {
    if (full()) return;
    // next undetermined cell in row-major order, skipping row/col 0
    while (cell < n * n && t[cell] != kNoElem) ++cell;
    if (cell == n * n) {
      FiniteMonoid m(n, t);
      out->insert(canonical_form(m).table());
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      t[cell] = v;
      if (consistent()) fill(cell + 1);
      t[cell] = kNoElem;
      if (full()) return;
    }
  }
};

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, std::size_t limit) {
  if (n == 0) throw ValidationError("enumerate_monoids: order must be positive");
  if (n > 5 && limit == 0)
    throw CapacityError("enumerate_monoids: exhaustive enumeration capped at order 5");

  std::vector<Elem> seed(n * n, kNoElem);
  for (Elem i = 0; i < n; ++i) {
    seed[i] = i;          // identity row
    seed[i * n] = i;      // identity column
  }

  std::set<std::vector<Elem>> canon;
  if (n <= 1) {
    canon.insert(seed);
  } else if (limit > 0) {
    Enumerator e{n, seed, &canon, limit};
    e.fill(0);
  } else {
    // split the tree on the first free cell for the parallel workers
    std::vector<std::set<std::vector<Elem>>> parts(n);
#pragma omp parallel for schedule(dynamic)
    for (Elem v = 0; v < n; ++v) {
      std::vector<Elem> t = seed;
      t[n + 1] = v;
      Enumerator e{n, std::move(t), &parts[v], 0};
      if (e.consistent()) e.fill(0);
    }
    for (auto& p : parts) canon.merge(p);
  }

  std::vector<FiniteMonoid> res;
  for (const auto& table : canon) {
    FiniteMonoid m(n, table);
    validate_or_throw(m);
    res.push_back(std::move(m));
  }
  return res;
}

}  // namespace monoidkit

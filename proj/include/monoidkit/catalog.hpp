#ifndef MONOIDKIT_CATALOG_HPP
#define MONOIDKIT_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

FiniteMonoid make_trivial();
FiniteMonoid make_cyclic_group(std::size_t k);
FiniteMonoid make_symmetric_group3();

/// Linear order of k elements under min; index 0 is the top (identity).
FiniteMonoid make_chain_semilattice(std::size_t k);

/// The four-element diamond lattice {D > E,F > G} with adjoined identity
/// (order 5).
FiniteMonoid make_diamond();

/// Meet-semilattice {0..k} x diamond (min on the chain, meet on the
/// diamond) with adjoined identity; order 4(k+1)+1. Labels D_i, E_i,
/// F_i, G_i.
FiniteMonoid make_diamond_stack(std::size_t k);

/// G u xG u x^2G u {x^3, x^4} over a finite group G, order 3|G|+2, with
/// x^i g * x^j h = x^(i+j) gh when i+j <= 2, x^3 when the powers sum to 3
/// (or when x^3 meets G), x^4 otherwise. Throws when G is not a group.
FiniteMonoid make_fountain(const FiniteMonoid& g);

/// Commutative idempotent monoid presented by generators a, b_1..b_k,
/// c_1..c_k with relations b_i a = c_i a, as normal-form subsets (c_i is
/// rewritten to b_i in the presence of a); order 4^k + 2^k.
FiniteMonoid make_truncated_presented_semilattice(std::size_t k);

struct CatalogEntry {
  std::string name;
  std::vector<int> parameters;
  std::string provenance;
  std::function<FiniteMonoid()> build;
};

/// The named fixtures used by the verification suite, each validated on
/// construction.
const std::vector<CatalogEntry>& catalog_entries();

/// Builds the entry with the given name; throws ValidationError for an
/// unknown name.
FiniteMonoid catalog_get(const std::string& name);

/// All monoids of the given order up to isomorphism, in a deterministic
/// order: backtracking over Cayley tables with the identity row/column
/// fixed, incremental associativity checks, and canonical-form rejection
/// of isomorphic duplicates. Stops after `limit` results when limit > 0.
/// Throws CapacityError for n > 5 with no limit.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t n, std::size_t limit = 0);

}  // namespace monoidkit

#endif

#ifndef MONOIDKIT_KERNELS_HPP
#define MONOIDKIT_KERNELS_HPP

#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

// Data-parallel inner loops shared by the relation and decider code.
// Each kernel writes disjoint indices, so the OpenMP versions are
// deterministic. monoidkit::ref holds plain serial loops that the tests
// and the benchmark compare against.

/// ideal_masks(v, Right)[x] = xM as a bitset; Left gives Mx.
std::vector<ElemSet> ideal_masks(const MonoidView& v, Side side);

/// Annihilator signature of a: sig[u] = least u' with a*u' == a*u
/// (Side::Right, the right congruence r(a)); Side::Left uses u*a.
std::vector<Elem> annihilator_signature(const MonoidView& v, Elem a, Side side);

/// star_partition(v, Right)[a] = least b with r(b) == r(a); the L* classes.
/// Side::Left gives R* via l(a).
std::vector<Elem> star_partition(const MonoidView& v, Side side);

/// All idempotents of the view.
ElemSet idempotent_set(const MonoidView& v);

/// For each x some y with xyx = x, or kNoElem.
std::vector<Elem> regular_witnesses(const MonoidView& v);

namespace ref {
std::vector<ElemSet> ideal_masks(const MonoidView& v, Side side);
std::vector<Elem> star_partition(const MonoidView& v, Side side);
ElemSet idempotent_set(const MonoidView& v);
std::vector<Elem> regular_witnesses(const MonoidView& v);
}  // namespace ref

}  // namespace monoidkit

#endif

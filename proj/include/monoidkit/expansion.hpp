#ifndef MONOIDKIT_EXPANSION_HPP
#define MONOIDKIT_EXPANSION_HPP

#include <unordered_map>
#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

/// A pair (A, a): a subset of the base monoid and a base element.
struct SElem {
  Mask subset;
  Elem elem;
  bool operator==(const SElem& o) const {
    return subset == o.subset && elem == o.elem;
  }
};

/// The semidirect product of a monoid acting on its power set:
/// (X,x)(Y,y) = (X u xY, xy), identity (empty, 1). Lazy: order 2^n * n,
/// elements encoded as subset-mask * n + element, never materialized.
class SView final : public MonoidView {
public:
  /// base order must be <= bit_cap (default 20).
  explicit SView(FiniteMonoid base, unsigned bit_cap = 20);

  std::size_t order() const override { return order_; }
  Elem identity() const override { return 0; }
  Elem product(Elem a, Elem b) const override;
  std::string label(Elem x) const override;

  const FiniteMonoid& base() const { return base_; }
  std::size_t base_order() const { return n_; }

  Elem encode(SElem s) const { return static_cast<Elem>(s.subset * n_ + s.elem); }
  Elem encode(Mask subset, Elem elem) const { return encode({subset, elem}); }
  SElem decode(Elem x) const { return {x / static_cast<Elem>(n_), static_cast<Elem>(x % n_)}; }

  /// aB = {a*b : b in B} as a mask over the base.
  Mask act(Elem a, Mask B) const;

private:
  FiniteMonoid base_;
  std::size_t n_;
  std::size_t order_;
};

/// The Szendrei expansion: the sub-monoid of S(M) on pairs (A,a) with
/// {1,a} subset of A, identity ({1},1). Dense indices over the valid
/// pairs; products are computed through the S(M) encoding.
class SzView final : public MonoidView {
public:
  explicit SzView(FiniteMonoid base, unsigned bit_cap = 20);

  std::size_t order() const override { return elems_.size(); }
  Elem identity() const override { return 0; }
  Elem product(Elem a, Elem b) const override;
  std::string label(Elem x) const override;

  const SView& ambient() const { return s_; }
  SElem decode(Elem x) const { return s_.decode(elems_[x]); }
  /// Index of an S(M) element inside Sz(M); kNoElem when not a member.
  Elem from_ambient(Elem s_index) const;

private:
  SView s_;
  std::vector<Elem> elems_;                       // ambient indices, identity first
  std::unordered_map<Elem, Elem> dense_;          // ambient index -> dense index
};

/// The surjection (A,a) -> a onto the base, with the section a -> (empty,a).
struct Retraction {
  const SView* view;
  Elem retract(Elem x) const { return view->decode(x).elem; }
  Elem embed(Elem a) const { return view->encode(0, a); }
};

Retraction retraction(const SView& sv);

/// Exhaustively checks that retract is a morphism onto the base and that
/// retract(embed(a)) == a; throws ValidationError on failure. Quadratic in
/// the S(M) order, so guarded by cap.
void check_retraction(const SView& sv, std::size_t pair_cap = 1u << 20);

/// Dense table equal pointwise to the view; identity relabelled to index 0
/// when necessary. Throws CapacityError above the cap.
FiniteMonoid materialize(const MonoidView& v, std::size_t cap = 4096);

}  // namespace monoidkit

#endif

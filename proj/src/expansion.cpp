#include "monoidkit/expansion.hpp"

#include <sstream>

namespace monoidkit {

SView::SView(FiniteMonoid base, unsigned bit_cap) : base_(std::move(base)), n_(base_.order()) {
  if (n_ > bit_cap)
    throw CapacityError("S(M): base order " + std::to_string(n_) +
                        " exceeds subset bit cap " + std::to_string(bit_cap));
  order_ = (std::size_t(1) << n_) * n_;
}

Mask SView::act(Elem a, Mask B) const {
  Mask out = 0;
  while (B) {
    unsigned b = static_cast<unsigned>(__builtin_ctzll(B));
    out |= Mask(1) << base_.at(a, static_cast<Elem>(b));
    B &= B - 1;
  }
  return out;
}

Elem SView::product(Elem x, Elem y) const {
  const SElem a = decode(x), b = decode(y);
  return encode(a.subset | act(a.elem, b.subset), base_.at(a.elem, b.elem));
}

std::string SView::label(Elem x) const {
  const SElem s = decode(x);
  std::ostringstream os;
  os << "({";
  bool first = true;
  for (Elem i = 0; i < n_; ++i)
    if (s.subset >> i & 1) {
      if (!first) os << ",";
      os << base_.label(i);
      first = false;
    }
  os << "}," << base_.label(s.elem) << ")";
  return os.str();
}

SzView::SzView(FiniteMonoid base, unsigned bit_cap) : s_(std::move(base), bit_cap) {
  const std::size_t n = s_.base_order();
  // mask-major, element-minor: ({1},1) has the smallest valid encoding,
  // so the identity lands at dense index 0
  for (Mask m = 0; m < (Mask(1) << n); ++m) {
    if (!(m & 1)) continue;  // must contain the base identity
    for (Elem a = 0; a < n; ++a) {
      if (!(m >> a & 1)) continue;
      const Elem amb = s_.encode(m, a);
      dense_.emplace(amb, static_cast<Elem>(elems_.size()));
      elems_.push_back(amb);
    }
  }
}

Elem SzView::product(Elem a, Elem b) const {
  const Elem amb = s_.product(elems_[a], elems_[b]);
  auto it = dense_.find(amb);
  if (it == dense_.end())
    throw ValidationError("Sz(M): product left the Szendrei subset");
  return it->second;
}

std::string SzView::label(Elem x) const { return s_.label(elems_[x]); }

Elem SzView::from_ambient(Elem s_index) const {
  auto it = dense_.find(s_index);
  return it == dense_.end() ? kNoElem : it->second;
}

Retraction retraction(const SView& sv) { return Retraction{&sv}; }

void check_retraction(const SView& sv, std::size_t pair_cap) {
  const Retraction rho = retraction(sv);
  const std::size_t n = sv.order();
  const FiniteMonoid& m = sv.base();
  for (Elem a = 0; a < m.order(); ++a) {
    if (rho.retract(rho.embed(a)) != a)
      throw ValidationError("retraction: section law fails at base element " +
                            std::to_string(a));
    for (Elem b = 0; b < m.order(); ++b)
      if (sv.product(rho.embed(a), rho.embed(b)) != rho.embed(m.at(a, b)))
        throw ValidationError("retraction: embedding is not a morphism");
  }
  if (n * n > pair_cap)
    throw CapacityError("check_retraction: view too large for exhaustive pair check");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (rho.retract(sv.product(x, y)) != m.at(rho.retract(x), rho.retract(y)))
        throw ValidationError("retraction: morphism law fails at pair (" +
                              std::to_string(x) + "," + std::to_string(y) + ")");
}

FiniteMonoid materialize(const MonoidView& v, std::size_t cap) {
  const std::size_t n = v.order();
  if (n > cap)
    throw CapacityError("materialize: view order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  // relabel so the identity sits at index 0
  const Elem id = v.identity();
  auto remap = [&](Elem x) -> Elem {
    if (x == id) return 0;
    if (x == 0) return id;
    return x;
  };
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) labels[remap(x)] = v.label(x);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      table[remap(x) * n + remap(y)] = remap(v.product(x, y));
  FiniteMonoid m(n, std::move(table), std::move(labels));
  validate_or_throw(m);
  return m;
}

}  // namespace monoidkit

#ifndef MONOIDKIT_TYPES_HPP
#define MONOIDKIT_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monoidkit {

/// Dense element index into a monoid or view.
using Elem = std::uint32_t;

/// Subset of a base monoid of order <= 64, one bit per element.
using Mask = std::uint64_t;

inline constexpr Elem kNoElem = static_cast<Elem>(-1);

/// Raised when an input table or derived structure violates an axiom.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a requested computation exceeds a configured cap.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Dynamic bitset over the elements of a view.
class ElemSet {
public:
  ElemSet() = default;
  explicit ElemSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static ElemSet from_mask(std::size_t n, Mask m) {
    ElemSet s(n);
    if (!s.w_.empty()) s.w_[0] = m;
    return s;
  }

  std::size_t size() const { return n_; }

  bool test(Elem x) const { return (w_[x >> 6] >> (x & 63)) & 1u; }
  void set(Elem x) { w_[x >> 6] |= std::uint64_t(1) << (x & 63); }
  void reset(Elem x) { w_[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ElemSet& operator-=(const ElemSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        f(static_cast<Elem>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  /// Sorted element list.
  std::vector<Elem> elems() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  Mask to_mask() const {
    if (n_ > 64) throw CapacityError("ElemSet::to_mask: set wider than 64 bits");
    return w_.empty() ? 0 : w_[0];
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h = h * 1099511628211ull ^ w;
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

using ElemPair = std::pair<Elem, Elem>;

enum class Side { Right, Left };

inline Side dual(Side s) { return s == Side::Right ? Side::Left : Side::Right; }
inline const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

}  // namespace monoidkit

#endif

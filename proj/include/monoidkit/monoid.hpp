#ifndef MONOIDKIT_MONOID_HPP
#define MONOIDKIT_MONOID_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "monoidkit/types.hpp"

namespace monoidkit {

/// Uniform access to a finite monoid, possibly one that is never
/// materialized as a dense table (e.g. the expansion of a base monoid).
/// Element indices are dense in [0, order()).
class MonoidView {
public:
  virtual ~MonoidView() = default;

  virtual std::size_t order() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem product(Elem a, Elem b) const = 0;

  /// Display string for an element; defaults to the index.
  virtual std::string label(Elem x) const;
};

/// Dense Cayley table with identity at index 0.
class FiniteMonoid final : public MonoidView {
public:
  FiniteMonoid() = default;
  FiniteMonoid(std::size_t n, std::vector<Elem> table,
               std::vector<std::string> labels = {});

  std::size_t order() const override { return n_; }
  Elem identity() const override { return 0; }
  Elem product(Elem a, Elem b) const override { return table_[a * n_ + b]; }
  Elem at(Elem a, Elem b) const { return table_[a * n_ + b]; }

  const std::vector<Elem>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Elem x) const override;

  bool operator==(const FiniteMonoid& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
};

/// Checks the monoid axioms. Returns a description of the first failure
/// found (out-of-range entry, identity law, or a witness triple for
/// associativity), or nullopt when the table is a monoid.
std::optional<std::string> validate(const FiniteMonoid& m);

/// validate() that throws ValidationError on failure.
void validate_or_throw(const FiniteMonoid& m);

/// Componentwise product; identity (0,0) maps to index 0.
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

/// Adjoins a fresh identity above an arbitrary n x n semigroup table.
/// The new identity becomes index 0; original elements shift up by one.
FiniteMonoid adjoin_identity(std::size_t n, const std::vector<Elem>& table,
                             std::vector<std::string> labels = {});

/// Lexicographically minimal table over all element permutations fixing
/// the identity. Guarded to order <= 9.
FiniteMonoid canonical_form(const FiniteMonoid& m);

bool isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

/// Checks identity laws and associativity of a view. Associativity is
/// exhaustive up to `exhaustive_cap` elements and spot-checked with
/// `random_trials` random triples above it. Returns a witness triple on
/// failure.
std::optional<std::array<Elem, 3>> find_view_violation(
    const MonoidView& v, std::size_t exhaustive_cap = 4096,
    std::size_t random_trials = 1000000, std::uint64_t seed = 1);

}  // namespace monoidkit

#endif

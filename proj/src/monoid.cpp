#include "monoidkit/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace monoidkit {

std::string MonoidView::label(Elem x) const { return std::to_string(x); }

FiniteMonoid::FiniteMonoid(std::size_t n, std::vector<Elem> table,
                           std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  if (table_.size() != n_ * n_)
    throw ValidationError("table size does not match order " + std::to_string(n_));
  if (!labels_.empty() && labels_.size() != n_)
    throw ValidationError("label count does not match order");
}

void FiniteMonoid::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    throw ValidationError("label count does not match order");
  labels_ = std::move(labels);
}

std::string FiniteMonoid::label(Elem x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

std::optional<std::string> validate(const FiniteMonoid& m) {
  const std::size_t n = m.order();
  if (n == 0) return "order must be at least 1";
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (m.at(x, y) >= n) {
        std::ostringstream os;
        os << "out-of-range entry table[" << x << "][" << y << "]=" << m.at(x, y);
        return os.str();
      }
  for (Elem x = 0; x < n; ++x) {
    if (m.at(0, x) != x) return "identity law fails: table[0][" + std::to_string(x) + "] != " + std::to_string(x);
    if (m.at(x, 0) != x) return "identity law fails: table[" + std::to_string(x) + "][0] != " + std::to_string(x);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = m.at(x, y);
      for (Elem z = 0; z < n; ++z)
        if (m.at(xy, z) != m.at(x, m.at(y, z))) {
          std::ostringstream os;
          os << "associativity fails at (" << x << "," << y << "," << z << ")";
          return os.str();
        }
    }
  return std::nullopt;
}

void validate_or_throw(const FiniteMonoid& m) {
  if (auto err = validate(m)) throw ValidationError(*err);
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> t(n * n);
  auto enc = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1)
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          t[enc(x1, y1) * n + enc(x2, y2)] = enc(a.at(x1, x2), b.at(y1, y2));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return FiniteMonoid(n, std::move(t), std::move(labels));
}

FiniteMonoid adjoin_identity(std::size_t n, const std::vector<Elem>& table,
                             std::vector<std::string> labels) {
  if (table.size() != n * n) throw ValidationError("adjoin_identity: bad table size");
  const std::size_t m = n + 1;
  std::vector<Elem> t(m * m);
  for (Elem x = 0; x < m; ++x) {
    t[0 * m + x] = x;
    t[x * m + 0] = x;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (table[x * n + y] >= n) throw ValidationError("adjoin_identity: out-of-range entry");
      t[(x + 1) * m + (y + 1)] = table[x * n + y] + 1;
    }
  std::vector<std::string> out_labels;
  if (!labels.empty()) {
    out_labels.push_back("1");
    out_labels.insert(out_labels.end(), labels.begin(), labels.end());
  }
  return FiniteMonoid(m, std::move(t), std::move(out_labels));
}

FiniteMonoid canonical_form(const FiniteMonoid& m) {
  const std::size_t n = m.order();
  if (n > 9) throw CapacityError("canonical_form: order above 9");
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best = m.table();
  std::vector<Elem> inv(n), cand(n * n);
  // permutations fixing the identity index 0
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    for (Elem i = 0; i < n; ++i) inv[perm[i]] = i;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        cand[perm[x] * n + perm[y]] = perm[m.at(x, y)];
    if (cand < best) best = cand;
    (void)inv;
  }
  return FiniteMonoid(n, std::move(best));
}

bool isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a).table() == canonical_form(b).table();
}

std::optional<std::array<Elem, 3>> find_view_violation(const MonoidView& v,
                                                       std::size_t exhaustive_cap,
                                                       std::size_t random_trials,
                                                       std::uint64_t seed) {
  const std::size_t n = v.order();
  const Elem e = v.identity();
  for (Elem x = 0; x < n; ++x)
    if (v.product(e, x) != x || v.product(x, e) != x) return std::array<Elem, 3>{e, x, x};
  auto bad = [&](Elem x, Elem y, Elem z) {
    return v.product(v.product(x, y), z) != v.product(x, v.product(y, z));
  };
  if (n <= exhaustive_cap) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (bad(x, y, z)) return std::array<Elem, 3>{x, y, z};
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
    for (std::size_t i = 0; i < random_trials; ++i) {
      Elem x = static_cast<Elem>(dist(rng)), y = static_cast<Elem>(dist(rng)),
           z = static_cast<Elem>(dist(rng));
      if (bad(x, y, z)) return std::array<Elem, 3>{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace monoidkit

#include "monoidkit/catalog.hpp"

#include <algorithm>

namespace monoidkit {

namespace {

FiniteMonoid build_table(std::size_t n, std::vector<std::string> labels,
                         const std::function<Elem(Elem, Elem)>& prod) {
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a * n + b] = prod(a, b);
  FiniteMonoid m(n, std::move(t), std::move(labels));
  validate_or_throw(m);
  return m;
}

}  // namespace

FiniteMonoid make_trivial() { return build_table(1, {"1"}, [](Elem, Elem) { return 0; }); }

FiniteMonoid make_cyclic_group(std::size_t k) {
  if (k == 0 || k > 64) throw CapacityError("make_cyclic_group: order out of range");
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = i == 0 ? "1" : "g^" + std::to_string(i);
  return build_table(k, std::move(labels), [k](Elem a, Elem b) {
    return static_cast<Elem>((a + b) % k);
  });
}

FiniteMonoid make_symmetric_group3() {
  // permutations of {0,1,2}: 1, (01), (02), (12), (012), (021)
  static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                  {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [](Elem a, Elem b) {
    int r[3];
    for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
    for (Elem c = 0; c < 6; ++c)
      if (r[0] == perms[c][0] && r[1] == perms[c][1] && r[2] == perms[c][2]) return c;
    return kNoElem;
  };
  return build_table(6, {"1", "(01)", "(02)", "(12)", "(012)", "(021)"}, compose);
}

FiniteMonoid make_chain_semilattice(std::size_t k) {
  if (k == 0 || k > 64) throw CapacityError("make_chain_semilattice: order out of range");
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i)
    labels[i] = i == 0 ? "T" : (i + 1 == k ? "bot" : "t" + std::to_string(k - 1 - i));
  // index 0 is the top; the product is the lower of the two, i.e. max index
  return build_table(k, std::move(labels),
                     [](Elem a, Elem b) { return std::max(a, b); });
}

namespace {

// diamond lattice: 0 = D (top), 1 = E, 2 = F, 3 = G (bottom)
Elem diamond_meet(Elem a, Elem b) {
  if (a == b) return a;
  if (a == 0) return b;
  if (b == 0) return a;
  return 3;
}

}  // namespace

FiniteMonoid make_diamond() { return make_diamond_stack(0); }

FiniteMonoid make_diamond_stack(std::size_t k) {
  if (4 * (k + 1) + 1 > 64) throw CapacityError("make_diamond_stack: order out of range");
  const std::size_t n = 4 * (k + 1);
  static const char* names[4] = {"D", "E", "F", "G"};
  std::vector<std::string> labels(n);
  std::vector<Elem> t(n * n);
  // element i*4+d is (level i, diamond part d); levels meet by min
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Elem>(std::min(x / 4, y / 4) * 4 +
                                       diamond_meet(x % 4, y % 4));
  for (std::size_t i = 0; i <= k; ++i)
    for (int d = 0; d < 4; ++d)
      labels[i * 4 + d] = std::string(names[d]) + "_" + std::to_string(i);
  FiniteMonoid m = adjoin_identity(n, t, std::move(labels));
  validate_or_throw(m);
  return m;
}

FiniteMonoid make_fountain(const FiniteMonoid& g) {
  {
    // every element must be invertible
    const std::size_t k = g.order();
    for (Elem a = 0; a < k; ++a) {
      bool inv = false;
      for (Elem b = 0; b < k && !inv; ++b) inv = g.at(a, b) == 0 && g.at(b, a) == 0;
      if (!inv) throw ValidationError("make_fountain: base is not a group");
    }
  }
  const std::size_t k = g.order();
  const std::size_t n = 3 * k + 2;  // G, xG, x^2 G, x^3, x^4
  const Elem x3 = static_cast<Elem>(3 * k), x4 = static_cast<Elem>(3 * k + 1);
  auto power = [&](Elem e) { return e >= x3 ? 3 + (e - x3) : e / k; };
  auto part = [&](Elem e) { return static_cast<Elem>(e % k); };
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < 3; ++i)
    for (Elem u = 0; u < k; ++u) {
      std::string base = g.labels().empty() ? "g" + std::to_string(u) : g.labels()[u];
      labels[i * k + u] = i == 0 ? base : "x^" + std::to_string(i) + "*" + base;
    }
  labels[x3] = "x^3";
  labels[x4] = "x^4";
  return build_table(n, std::move(labels), [&](Elem a, Elem b) -> Elem {
    const std::size_t i = power(a), j = power(b);
    if (i <= 2 && j <= 2) {
      if (i + j <= 2) return static_cast<Elem>((i + j) * k + g.at(part(a), part(b)));
      if (i >= 1 && j >= 1 && i + j == 3) return x3;
      return x4;
    }
    if ((i == 0 && j == 3) || (i == 3 && j == 0)) return x3;
    return x4;
  });
}

FiniteMonoid make_truncated_presented_semilattice(std::size_t k) {
  if (k == 0) throw ValidationError("make_truncated_presented_semilattice: k >= 1");
  if (k > 2) throw CapacityError("make_truncated_presented_semilattice: k > 2");
  // normal forms over generators a, b_1..b_k, c_1..c_k: any subset of the
  // b's and c's, or a together with a subset of the b's (b_i a = c_i a)
  struct Nf {
    bool a;
    unsigned bs, cs;  // k-bit masks
  };
  std::vector<Nf> forms;
  for (unsigned bs = 0; bs < (1u << k); ++bs)
    for (unsigned cs = 0; cs < (1u << k); ++cs) forms.push_back({false, bs, cs});
  for (unsigned bs = 0; bs < (1u << k); ++bs) forms.push_back({true, bs, 0});
  auto index_of = [&](Nf f) -> Elem {
    if (f.a) {
      f.bs |= f.cs;  // c_i rewrites to b_i next to a
      f.cs = 0;
    }
    for (Elem i = 0; i < forms.size(); ++i)
      if (forms[i].a == f.a && forms[i].bs == f.bs && forms[i].cs == f.cs) return i;
    return kNoElem;
  };
  std::vector<std::string> labels;
  for (const auto& f : forms) {
    std::string s;
    auto app = [&](const std::string& g) { s += (s.empty() ? "" : ".") + g; };
    if (f.a) app("a");
    for (unsigned i = 0; i < k; ++i)
      if (f.bs >> i & 1) app("b" + std::to_string(i + 1));
    for (unsigned i = 0; i < k; ++i)
      if (f.cs >> i & 1) app("c" + std::to_string(i + 1));
    labels.push_back(s.empty() ? "1" : s);
  }
  return build_table(forms.size(), std::move(labels), [&](Elem x, Elem y) {
    return index_of({forms[x].a || forms[y].a, forms[x].bs | forms[y].bs,
                     forms[x].cs | forms[y].cs});
  });
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    auto add = [&](std::string name, std::vector<int> params, std::string prov,
                   std::function<FiniteMonoid()> build) {
      e.push_back({std::move(name), std::move(params), std::move(prov), std::move(build)});
    };
    add("trivial", {}, "standard", make_trivial);
    add("U2", {}, "standard: two-element semilattice", [] { return make_chain_semilattice(2); });
    add("Z2", {2}, "standard", [] { return make_cyclic_group(2); });
    add("Z3", {3}, "standard", [] { return make_cyclic_group(3); });
    add("Z4", {4}, "standard", [] { return make_cyclic_group(4); });
    add("V4", {}, "standard: Klein four-group",
        [] { return direct_product(make_cyclic_group(2), make_cyclic_group(2)); });
    add("S3", {}, "standard", make_symmetric_group3);
    for (int kk = 3; kk <= 8; ++kk)
      add("chain" + std::to_string(kk), {kk}, "finite chain under min",
          [kk] { return make_chain_semilattice(kk); });
    add("diamond", {}, "diamond lattice with identity", make_diamond);
    for (int kk = 0; kk <= 2; ++kk)
      add("dstack" + std::to_string(kk), {kk}, "truncated chain-of-diamonds semilattice",
          [kk] { return make_diamond_stack(kk); });
    add("fountainZ2", {2}, "Fountain construction over Z2",
        [] { return make_fountain(make_cyclic_group(2)); });
    add("psl1", {1}, "presented semilattice b a = c a, truncated",
        [] { return make_truncated_presented_semilattice(1); });
    add("psl2", {2}, "presented semilattice b_i a = c_i a, truncated",
        [] { return make_truncated_presented_semilattice(2); });
    add("U2xZ2", {}, "standard",
        [] { return direct_product(make_chain_semilattice(2), make_cyclic_group(2)); });
    add("rz1", {2}, "two-element right-zero semigroup with identity", [] {
      return adjoin_identity(2, {0, 1, 0, 1}, {"r0", "r1"});
    });
    add("lz1", {2}, "two-element left-zero semigroup with identity", [] {
      return adjoin_identity(2, {0, 0, 1, 1}, {"l0", "l1"});
    });
    return e;
  }();
  return entries;
}

FiniteMonoid catalog_get(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e.build();
  throw ValidationError("catalog_get: unknown entry '" + name + "'");
}

}  // namespace monoidkit

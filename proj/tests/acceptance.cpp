// Acceptance gate: thirteen scenario checks (AC1..AC13), each printing a
// single pass/fail line with its wall time. Exits nonzero on any failure.
// Run with AC names as arguments to restrict (default: all).
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "monoidkit/acts.hpp"
#include "monoidkit/catalog.hpp"
#include "monoidkit/deciders.hpp"
#include "monoidkit/expansion.hpp"
#include "monoidkit/relations.hpp"
#include "monoidkit/verifier.hpp"
#include "support/oracles.hpp"

namespace mk = monoidkit;

namespace {

std::string run_checks(const std::vector<std::string>& ids, std::size_t enum_max,
                       std::size_t catalog_max, std::size_t samples = 300) {
  mk::VerifierConfig cfg;
  cfg.check_ids = ids;
  cfg.enum_order_max = enum_max;
  cfg.catalog_order_max = catalog_max;
  cfg.samples = samples;
  const auto rep = mk::run_suite(cfg);
  for (const auto& r : rep.results)
    if (r.status == mk::CheckResult::Status::Fail ||
        r.status == mk::CheckResult::Status::Error)
      return r.id + ": " + r.counterexample;
  return {};
}

// AC1: idempotents of S(M) and the semilattice criterion, enumerated
// order <= 4 plus catalog order <= 8.
std::string ac1() { return run_checks({"SREG-1"}, 4, 8); }

// AC2: regular(S(M)) iff group(M); listed groups proper inverse.
std::string ac2() { return run_checks({"SREG-2"}, 4, 5); }

// AC3: star/tilde descriptions, both directions of every iff.
std::string ac3() {
  return run_checks({"RREL-1", "RREL-3", "RREL-4", "RREL-6", "LREL-1", "LREL-2",
                     "LREL-3", "LREL-4", "LREL-5", "LREL-6", "LREL-7"},
                    3, 5);
}

// AC4: finite-structure identities for R/L((M,1),(M,1)) plus the chain
// generator-count monotonicity observation.
std::string ac4() { return run_checks({"FIN-R", "FIN-L", "CHAIN-RGEN-MONO"}, 4, 5); }

// AC5: principal right-ideal Howson transfer, both directions, and the
// K-set construction (exhaustive <= 3, >= 1000 sampled instances on 4..5).
std::string ac5() {
  return run_checks({"SRIH-EQUIV", "SRIH-IMPL", "SRIH-K"}, 4, 5, 1000);
}

// AC6: left transfer: principally left ideal Howson iff 1-co-ordinated.
std::string ac6() { return run_checks({"LCOORD-EQUIV"}, 4, 5, 2000); }

// AC7: singleton generation of r((A,a)) for right-abundant bases, with
// length-2 same-skeleton witnesses.
std::string ac7() { return run_checks({"FRE-RABUND", "SKEL-RABUND"}, 1, 5); }

// AC8: singleton generation of l((A,a)) over groups of order <= 4.
std::string ac8() { return run_checks({"RCANC", "SKEL-RCANC"}, 1, 5); }

// AC9: the Fountain(Z2) generating sets.
std::string ac9() { return run_checks({"FOUNTAIN-R-ANNIH"}, 1, 5); }

// AC10: the Y-set generates the restricted pairs.
std::string ac10() { return run_checks({"EASYSEQ"}, 3, 3); }

// AC11: congruence closure against the naive fixpoint oracle, with
// witness replay, >= 100 random W per catalog entry of view order <= 200.
std::string ac11() {
  std::mt19937_64 rng(11);
  for (const auto& e : mk::catalog_entries()) {
    const mk::FiniteMonoid base = e.build();
    std::vector<const mk::MonoidView*> views{&base};
    mk::SView sv(base);
    if (sv.order() <= 200) views.push_back(&sv);
    for (const mk::MonoidView* v : views) {
      std::uniform_int_distribution<mk::Elem> el(0, mk::Elem(v->order() - 1));
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<mk::ElemPair> w;
        for (int i = 0, sz = 1 + int(rng() % 3); i < sz; ++i)
          w.push_back({el(rng), el(rng)});
        const mk::Side side = rng() & 1 ? mk::Side::Right : mk::Side::Left;
        const auto kind = side == mk::Side::Right ? mk::RelKind::RightCongruence
                                                  : mk::RelKind::LeftCongruence;
        const mk::EqRelation fast = mk::congruence_closure(*v, w, kind);
        if (fast != mk::oracle::naive_congruence_closure(*v, w, kind))
          return e.name + ": closure disagrees with the fixpoint oracle";
        const mk::Elem x = el(rng);
        const mk::Elem y = fast.rep(x);
        const auto ws = mk::find_w_sequence(*v, w, side, x, y);
        if (!ws || !mk::replay_w_sequence(*v, w, *ws))
          return e.name + ": witness missing or failed to replay";
      }
    }
  }
  return {};
}

// AC12: chain co-ordinate systems accepted exhaustively; diamond-stack
// minimum strictly increasing.
std::string ac12() { return run_checks({"CHAIN-COORD", "DSTACK-COORD"}, 1, 5); }

// AC13: enumerator vs brute-force oracle; frozen counts.
std::string ac13() {
  static const std::size_t expected[] = {1, 2, 7};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fast = mk::enumerate_monoids(n);
    const auto slow = mk::oracle::brute_force_monoids(n);
    if (fast.size() != slow.size() || fast.size() != expected[n - 1])
      return "order " + std::to_string(n) + ": " + std::to_string(fast.size()) +
             " enumerated vs " + std::to_string(slow.size()) + " brute-forced";
    for (const auto& s : slow) {
      bool matched = false;
      for (const auto& f : fast) matched = matched || mk::isomorphic(f, s);
      if (!matched) return "order " + std::to_string(n) + ": class missed";
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<std::string()>>> acs = {
      {"AC1", ac1},   {"AC2", ac2},   {"AC3", ac3},   {"AC4", ac4},
      {"AC5", ac5},   {"AC6", ac6},   {"AC7", ac7},   {"AC8", ac8},
      {"AC9", ac9},   {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12},
      {"AC13", ac13},
  };
  int failures = 0;
  for (const auto& [name, fn] : acs) {
    bool wanted = argc <= 1;
    for (int i = 1; i < argc; ++i) wanted = wanted || name == argv[i];
    if (!wanted) continue;
    const auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = fn();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (err.empty()) {
      std::printf("%s: PASS (%.1fs)\n", name.c_str(), s);
    } else {
      std::printf("%s: FAIL (%.1fs) %s\n", name.c_str(), s, err.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

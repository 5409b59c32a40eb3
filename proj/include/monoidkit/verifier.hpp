#ifndef MONOIDKIT_VERIFIER_HPP
#define MONOIDKIT_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoidkit/monoid.hpp"
#include "monoidkit/types.hpp"

namespace monoidkit {

struct VerifierConfig {
  std::vector<std::string> check_ids;  // empty = whole manifest
  std::size_t enum_order_max = 3;      // enumerated-universe cap
  std::size_t catalog_order_max = 5;   // catalog-universe cap
  std::size_t samples = 300;           // per sampled quantifier
  std::uint64_t seed = 1;
  std::string artifact_dir;            // counterexample .mon files, "" = skip
};

struct CheckOutcome {
  std::optional<std::string> failure;       // instance data, replayable
  bool sampled = false;                     // some quantifier was sampled
  std::optional<FiniteMonoid> witness;      // monoid behind the failure
};

using CheckFn = CheckOutcome (*)(const VerifierConfig&);

/// One verifiable claim. Checks are data so the manifest can be diffed
/// against the claim inventory by the tests.
struct CheckDef {
  std::string id;        // stable, e.g. "SREG-1"
  std::string claim;
  std::string anchor;    // statement the claim mirrors, e.g. "lem:Sreg(1)"
  std::string universe;  // quantification domain at default config
  CheckFn run;
};

const std::vector<CheckDef>& check_manifest();

/// FNV-1a over the manifest ids and anchors; embedded in --version.
std::string manifest_hash();

struct CheckResult {
  std::string id;
  enum class Status { Pass, SampledPass, Fail, Error } status;
  std::string universe;
  double elapsed_ms = 0;
  std::string counterexample;       // empty unless Fail/Error
  std::string counterexample_file;  // written artifact, may be empty
};

struct VerdictReport {
  std::vector<CheckResult> results;
  bool all_passed = true;
  std::uint64_t seed = 1;
};

/// Runs the selected checks (unknown id -> ValidationError). Results are
/// ordered by manifest position regardless of scheduling.
VerdictReport run_suite(const VerifierConfig& config = {});

std::string report_to_json(const VerdictReport& report);

/// Names accepted by search_counterexample.
std::vector<std::string> predicate_ids();

struct SearchHit {
  FiniteMonoid monoid;
  std::string detail;
};

/// Smallest monoid (catalog entries of fitting order, then exhaustive
/// enumeration in canonical order) falsifying the predicate, or nullopt.
std::optional<SearchHit> search_counterexample(const std::string& predicate_id,
                                               std::size_t order_min,
                                               std::size_t order_max);

}  // namespace monoidkit

#endif

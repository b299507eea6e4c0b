#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rtheta/oracle.hpp"

namespace rtheta {

// One equivalence campaign: generate (or sample) canonical codes, run the
// four-condition checker and the brute-force oracle on each, and compare,
// together with the structural side conditions.
struct SweepOptions {
  int n = 2;
  std::vector<RTheta> thetas;  // empty = all eight
  GenLimits limits;
  std::optional<int> sample;   // per theta; nullopt = exhaustive
  uint64_t seed = 1;
  uint64_t word_cap = kDefaultWordCap;
  int sampled_trials = 4096;   // oracle fallback above the cap
  int jobs = 1;
  bool check_pairs = true;
  bool check_roundtrip = true;
};

struct CodeOutcome {
  CanonicalGenerators gens;
  int size_log2 = 0;
  bool checker_reversible = false;
  bool oracle_reversible = false;
  bool oracle_exact = true;     // false: sampled fallback, not proven
  int pairs_total = 0;
  int pairs_agree = 0;
  bool rc_all_pairs = false;    // checker verdict over every pair
  bool reversible_agree = false;
  bool size_identity_ok = false;
  bool consequences_ok = false;  // vacuously true for non-reversible codes
  bool roundtrip_ok = false;
};

struct SweepSummary {
  uint64_t codes = 0;
  uint64_t reversible = 0;
  uint64_t reversible_agree = 0;
  uint64_t pair_checks = 0;
  uint64_t pair_agree = 0;
  uint64_t size_identity_ok = 0;
  uint64_t consequences_ok = 0;
  uint64_t roundtrip_ok = 0;
  uint64_t oracle_sampled = 0;

  bool all_agree() const {
    return reversible_agree == codes && pair_agree == pair_checks;
  }
  bool all_structural_ok() const {
    return size_identity_ok == codes && consequences_ok == codes;
  }
};

// Runs the campaign; outcomes are delivered to sink (when given) in a
// deterministic order regardless of the job count.
SweepSummary run_sweep(const SweepOptions& opts,
                       const std::function<void(const CodeOutcome&)>& sink = {});

// Evaluate a single code against the oracle (shared by sweep and CLI).
CodeOutcome evaluate_code(const CanonicalGenerators& gens,
                          const SweepOptions& opts);

}  // namespace rtheta

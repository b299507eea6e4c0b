#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtheta/code.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

// Built-in demonstration codes, one per ring flavour, used by the `examples`
// subcommand and the regression suite.
struct BuiltinCode {
  int id = 0;  // 1..6
  CanonicalGenerators gens;
};

const std::vector<BuiltinCode>& builtin_codes();

// The classification table: each row checks one builtin code against one
// complement pair (or against every valid pair when pair is empty).
struct ClassificationSpec {
  int row = 0;      // 1..10
  int code_id = 0;  // into builtin_codes
  std::optional<std::pair<RTheta, RTheta>> pair;  // nullopt = all pairs
};

const std::vector<ClassificationSpec>& classification_rows();

struct ClassificationResult {
  int row = 0;
  int code_id = 0;
  RTheta theta;
  int n = 0;
  bool reversible = false;
  std::string pair_u;  // element text, or "all"
  std::string pair_t;
  bool rev_comp = false;       // for "all": every pair
  bool oracle_agrees = false;  // checker == brute force on this row
};

// Runs checker and brute-force oracle over every table row.
std::vector<ClassificationResult> classify_builtins(
    uint64_t word_cap = uint64_t(1) << 24);

// CSV with header: example_id,theta,n,reversible,pair_u,pair_t,rev_comp,
// oracle_agrees.
std::string classification_csv(const std::vector<ClassificationResult>& rows);
std::string classification_json(const std::vector<ClassificationResult>& rows,
                                int indent = 2);

}  // namespace rtheta

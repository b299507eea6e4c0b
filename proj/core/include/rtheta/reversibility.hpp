#pragma once

#include <string>

#include "rtheta/code.hpp"

namespace rtheta {

struct ConditionResult {
  bool holds = false;
  std::string witness;  // failing polynomial, or the membership certificate
  friend bool operator==(const ConditionResult&, const ConditionResult&) = default;
};

// Outcome of the four-condition reversibility test. The exponents are the
// degree gaps as customarily reported, with deg 0 := 0 for zero polynomials
// (their term vanishes, so the value never matters in the formulas).
struct ReversibilityReport {
  bool verdict = false;
  ConditionResult cond_i, cond_ii, cond_iii, cond_iv;
  int alpha = 0, beta = 0, gamma = 0, delta = 0;
  friend bool operator==(const ReversibilityReport&,
                         const ReversibilityReport&) = default;
};

// Reversibility of the Z4 cyclic code <g + 2p, 2a>: g and a self-reciprocal
// and a | z^lambda p* - p with lambda = deg g - deg p. Preconditions
// (a | g | z^n-1; p = 0 or a | p (z^n-1)/g with deg a > deg p) are checked
// and violations throw ValidationError.
bool z4_reversible(const BinPoly& g, const BinPoly& p, const BinPoly& a, int n);

// The four-condition decision procedure; by the governing theorem the
// verdict equals closure of the code under word reversal.
ReversibilityReport check_theorem2(const CyclicCode& c);

// Consequence checks for reversible codes: Tor(C) resp. phi(C) must be
// reversible Z4 cyclic codes. Not decision procedures on their own.
bool torsion_reversible_consequence(const CyclicCode& c);
bool phi_reversible_consequence(const CyclicCode& c);

}  // namespace rtheta

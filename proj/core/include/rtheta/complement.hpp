#pragma once

#include <vector>

#include "rtheta/code.hpp"
#include "rtheta/reversibility.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

// Verdict for one (u,t) pair: the code is (u,t)-reversible-complement iff it
// is reversible and the complement of the reversed zero word lies in it.
struct RevCompReport {
  ComplementPair pair;
  bool reversible = false;
  bool zero_word_in_code = false;
  bool verdict = false;
  ReversibilityReport reversibility;
};

// Coefficient i of the result is the (u,t)-complement of coefficient n-1-i
// of s (zero padded to length n). Throws ValidationError when deg s >= n.
RPoly reverse_complement(const RPoly& s, int n, const ComplementPair& cp,
                         const ThetaParam& tp);

// Complement of the reversed zero word: every coefficient is u^{-1} t.
RPoly zero_reverse_complement(int n, const ThetaParam& tp,
                              const ComplementPair& cp);

RevCompReport check_rev_comp(const CyclicCode& c, const ComplementPair& cp);

// One report per valid pair, in enumeration order.
std::vector<RevCompReport> check_all_pairs(const CyclicCode& c);

}  // namespace rtheta

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "rtheta/code.hpp"
#include "rtheta/complement.hpp"

namespace rtheta {

// Default enumeration budget for the brute-force oracle.
inline constexpr uint64_t kDefaultWordCap = uint64_t(1) << 24;

// Enumerates every codeword once and answers closure questions by set
// lookup. Decisions here use only span enumeration and word operations,
// independently of the four-condition checker.
class BruteForce {
 public:
  // Throws CapExceededError when |C| > word_cap (or n > 16).
  explicit BruteForce(const CyclicCode& c, uint64_t word_cap = kDefaultWordCap);

  // Closure under word reversal.
  bool reversible() const;
  // Closure under reversal followed by coefficientwise (u,t)-complement.
  bool rev_comp(const ComplementPair& cp) const;

  uint64_t word_count() const { return words_.size(); }
  // Every enumerated word, nibble-packed: nibble i = a_i + 4 b_i.
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  bool contains_packed(uint64_t w) const;
  uint64_t reverse_packed(uint64_t w) const;

  int n_;
  const ThetaParam* tp_;
  std::vector<uint64_t> words_;
  std::vector<uint64_t> bitmap_;  // used when 16^n is small enough
  std::unordered_set<uint64_t> set_;
  bool use_bitmap_ = false;
};

bool brute_reversible(const CyclicCode& c, uint64_t cap = kDefaultWordCap);
bool brute_rev_comp(const CyclicCode& c, const ComplementPair& cp,
                    uint64_t cap = kDefaultWordCap);

// Randomized fallback for codes above the cap: checks closure on `trials`
// random codewords (sampled, not proven).
bool sampled_reversible(const CyclicCode& c, int trials, uint64_t seed);
bool sampled_rev_comp(const CyclicCode& c, const ComplementPair& cp, int trials,
                      uint64_t seed);

struct GenLimits {
  // Maximum degree of the offset polynomials g13, g14, g23, g24;
  // negative means unbounded (n-1).
  int max_offset_deg = -1;
};

// Every canonical generator tuple of length n over theta within the offset
// degree limits: all constraints hold and the built code is consistent with
// its stated residue/torsion pairs. No duplicates; deterministic order.
std::vector<CanonicalGenerators> generate_all_codes(int n, RTheta theta,
                                                    const GenLimits& lim = {});

// Random canonical tuples, deterministic for a fixed seed.
std::vector<CanonicalGenerators> sample_codes(int n, RTheta theta, int count,
                                              uint64_t seed,
                                              const GenLimits& lim = {});

namespace detail {
// Tuples passing constraint validation but not yet the build consistency
// filter; generate_all_codes is this plus the filter.
std::vector<CanonicalGenerators> generate_candidates(int n, RTheta theta,
                                                     const GenLimits& lim);
}  // namespace detail

}  // namespace rtheta

#include "rtheta/complement.hpp"

namespace rtheta {

RPoly reverse_complement(const RPoly& s, int n, const ComplementPair& cp,
                         const ThetaParam& tp) {
  if (s.degree_or(-1) >= n) {
    throw ValidationError("reverse_complement: degree >= length n");
  }
  std::vector<RTheta> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    c[static_cast<size_t>(i)] =
        complement(s.coeff(static_cast<size_t>(n - 1 - i)), cp, tp);
  }
  return RPoly::from_coeffs(std::move(c));
}

RPoly zero_reverse_complement(int n, const ThetaParam& tp,
                              const ComplementPair& cp) {
  const RTheta value = tp.mul(cp.u, cp.t);  // u^{-1} t with u^{-1} = u
  std::vector<RTheta> c(static_cast<size_t>(n), value);
  return RPoly::from_coeffs(std::move(c));
}

namespace {

RevCompReport report_for(const CyclicCode& c, const ComplementPair& cp,
                         const ReversibilityReport& rev) {
  RevCompReport r{cp};
  r.reversibility = rev;
  r.reversible = rev.verdict;
  r.zero_word_in_code =
      c.member(zero_reverse_complement(c.n(), c.ring(), cp));
  r.verdict = r.reversible && r.zero_word_in_code;
  return r;
}

}  // namespace

RevCompReport check_rev_comp(const CyclicCode& c, const ComplementPair& cp) {
  return report_for(c, cp, check_theorem2(c));
}

std::vector<RevCompReport> check_all_pairs(const CyclicCode& c) {
  const ReversibilityReport rev = check_theorem2(c);
  std::vector<RevCompReport> out;
  for (const ComplementPair& cp : c.ring().complement_pairs()) {
    out.push_back(report_for(c, cp, rev));
  }
  return out;
}

}  // namespace rtheta

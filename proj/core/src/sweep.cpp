#include "rtheta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rtheta/reversibility.hpp"

namespace rtheta {

namespace {

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

CodeOutcome evaluate_code(const CanonicalGenerators& gens,
                          const SweepOptions& opts) {
  CodeOutcome out;
  out.gens = gens;
  const CyclicCode code = CyclicCode::build(gens);
  out.size_log2 = code.size_log2();

  const std::vector<RevCompReport> pair_reports =
      opts.check_pairs ? check_all_pairs(code)
                       : std::vector<RevCompReport>{};
  const ReversibilityReport rep =
      opts.check_pairs ? pair_reports.empty() ? check_theorem2(code)
                                              : pair_reports.front().reversibility
                       : check_theorem2(code);
  out.checker_reversible = rep.verdict;

  const bool fits =
      out.size_log2 < 64 && (uint64_t(1) << out.size_log2) <= opts.word_cap;
  out.oracle_exact = fits;
  if (fits) {
    const BruteForce bf(code, opts.word_cap);
    out.oracle_reversible = bf.reversible();
    if (opts.check_pairs) {
      out.rc_all_pairs = true;
      for (const RevCompReport& pr : pair_reports) {
        ++out.pairs_total;
        const bool brute = bf.rev_comp(pr.pair);
        if (brute == pr.verdict) ++out.pairs_agree;
        out.rc_all_pairs = out.rc_all_pairs && pr.verdict;
      }
    }
  } else {
    out.oracle_reversible =
        sampled_reversible(code, opts.sampled_trials, opts.seed ^ 0x5eed);
    if (opts.check_pairs) {
      out.rc_all_pairs = true;
      for (const RevCompReport& pr : pair_reports) {
        ++out.pairs_total;
        const bool brute = sampled_rev_comp(code, pr.pair, opts.sampled_trials,
                                            opts.seed ^ 0xc0de);
        if (brute == pr.verdict) ++out.pairs_agree;
        out.rc_all_pairs = out.rc_all_pairs && pr.verdict;
      }
    }
  }
  out.reversible_agree = out.checker_reversible == out.oracle_reversible;

  out.size_identity_ok =
      code.size_log2() ==
      code.phi_module().size_log2() + code.torsion_module().size_log2();

  out.consequences_ok = true;
  if (out.checker_reversible) {
    out.consequences_ok = torsion_reversible_consequence(code) &&
                          phi_reversible_consequence(code);
  }

  if (opts.check_roundtrip) {
    try {
      const auto& gp = code.generator_polys();
      const CanonicalGenerators back = canonicalize(
          std::vector<RPoly>(gp.begin(), gp.end()), gens.n, gens.theta);
      out.roundtrip_ok = back == gens;
    } catch (const Error&) {
      out.roundtrip_ok = false;
    }
  } else {
    out.roundtrip_ok = true;
  }
  return out;
}

SweepSummary run_sweep(const SweepOptions& opts,
                       const std::function<void(const CodeOutcome&)>& sink) {
  std::vector<RTheta> thetas = opts.thetas;
  if (thetas.empty()) {
    const auto& all = ThetaParam::admissible();
    thetas.assign(all.begin(), all.end());
  }

  SweepSummary summary;
  for (const RTheta theta : thetas) {
    std::vector<CanonicalGenerators> codes;
    if (opts.sample) {
      codes = sample_codes(opts.n, theta, *opts.sample, opts.seed, opts.limits);
    } else {
      codes = generate_all_codes(opts.n, theta, opts.limits);
    }

    std::vector<CodeOutcome> outcomes(codes.size());
    parallel_for(codes.size(), opts.jobs, [&](size_t i) {
      outcomes[i] = evaluate_code(codes[i], opts);
    });

    for (const CodeOutcome& o : outcomes) {
      ++summary.codes;
      if (o.checker_reversible) ++summary.reversible;
      if (o.reversible_agree) ++summary.reversible_agree;
      summary.pair_checks += static_cast<uint64_t>(o.pairs_total);
      summary.pair_agree += static_cast<uint64_t>(o.pairs_agree);
      if (o.size_identity_ok) ++summary.size_identity_ok;
      if (o.consequences_ok) ++summary.consequences_ok;
      if (o.roundtrip_ok) ++summary.roundtrip_ok;
      if (!o.oracle_exact) ++summary.oracle_sampled;
      if (sink) sink(o);
    }
  }
  return summary;
}

}  // namespace rtheta

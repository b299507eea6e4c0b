#include "rtheta/corpus.hpp"

#include <sstream>

#include "json.hpp"
#include "rtheta/complement.hpp"
#include "rtheta/io.hpp"
#include "rtheta/oracle.hpp"
#include "rtheta/reversibility.hpp"

namespace rtheta {

namespace {

BinPoly bp(std::initializer_list<int> bits) {
  std::vector<Z2> c;
  for (int b : bits) c.push_back(Z2{static_cast<uint8_t>(b)});
  return BinPoly::from_coeffs(std::move(c));
}

std::vector<BuiltinCode> make_builtins() {
  std::vector<BuiltinCode> out;
  const BinPoly zero;

  // 1: n=4 over v^2 = 2v.
  out.push_back({1, CanonicalGenerators::make(
                        4, RTheta{0, 2},
                        /*g11*/ bp({1, 1, 1, 1}), /*g12*/ zero, /*g13*/ zero,
                        /*g14*/ zero, /*g22*/ bp({1, 0, 1}), /*g23*/ zero,
                        /*g24*/ bp({1}), /*g33*/ bp({1, 0, 1}),
                        /*g34*/ zero, /*g44*/ bp({1, 1}))});
  // 2: n=6 over v^2 = 2+v.
  out.push_back({2, CanonicalGenerators::make(
                        6, RTheta{2, 1},
                        bp({1, 1, 0, 1, 1}), zero, zero, zero,
                        bp({1, 1, 1}), bp({1, 1, 1}), zero,
                        bp({1, 1, 0, 1, 1}), zero, bp({1, 1, 1}))});
  // 3: n=4 over v^2 = 3+2v.
  out.push_back({3, CanonicalGenerators::make(
                        4, RTheta{3, 2},
                        bp({1, 1, 1, 1}), zero, bp({1}), zero,
                        bp({1, 0, 1}), zero, zero,
                        bp({1, 1}), zero, bp({1}))});
  // 4: n=4 over v^2 = 2v; gbar1 = z+3.
  out.push_back({4, CanonicalGenerators::make(
                        4, RTheta{0, 2},
                        bp({1, 1, 1, 1}), zero, bp({1, 1}), bp({1}),
                        bp({1, 0, 1}), zero, bp({1}),
                        bp({1, 0, 1}), zero, bp({1, 1}))});
  // 5: n=6 over v^2 = v.
  out.push_back({5, CanonicalGenerators::make(
                        6, RTheta{0, 1},
                        bp({1, 1, 1, 1, 1, 1}), zero, bp({1, 0, 1, 0, 1}), zero,
                        bp({1, 1}), bp({1, 1}), zero,
                        bp({1, 1, 1, 1, 1, 1}), zero, bp({1}))});
  // 6: n=6 over v^2 = 0; torsion generator z^3+3 splits as (z^3+1) + 2*1.
  out.push_back({6, CanonicalGenerators::make(
                        6, RTheta{0, 0},
                        bp({1, 1, 1, 1, 1, 1}), zero, bp({1, 1, 1}), bp({0, 1}),
                        bp({1, 0, 1, 0, 1}), zero, zero,
                        bp({1, 0, 0, 1}), bp({1}), bp({1, 1, 1}))});
  return out;
}

}  // namespace

const std::vector<BuiltinCode>& builtin_codes() {
  static const std::vector<BuiltinCode> codes = make_builtins();
  return codes;
}

const std::vector<ClassificationSpec>& classification_rows() {
  static const std::vector<ClassificationSpec> rows = [] {
    std::vector<ClassificationSpec> r;
    r.push_back({1, 1, std::nullopt});
    r.push_back({2, 2, std::pair{RTheta{1, 0}, RTheta{2, 1}}});
    r.push_back({3, 2, std::pair{RTheta{1, 2}, RTheta{0, 2}}});
    r.push_back({4, 3, std::pair{RTheta{3, 2}, RTheta{2, 0}}});
    r.push_back({5, 3, std::pair{RTheta{3, 0}, RTheta{2, 2}}});
    r.push_back({6, 4, std::pair{RTheta{1, 0}, RTheta{0, 1}}});
    r.push_back({7, 4, std::pair{RTheta{1, 0}, RTheta{3, 1}}});
    r.push_back({8, 5, std::pair{RTheta{1, 0}, RTheta{0, 1}}});
    r.push_back({9, 5, std::pair{RTheta{1, 2}, RTheta{0, 2}}});
    r.push_back({10, 6, std::nullopt});
    return r;
  }();
  return rows;
}

std::vector<ClassificationResult> classify_builtins(uint64_t word_cap) {
  std::vector<ClassificationResult> out;
  for (const ClassificationSpec& spec : classification_rows()) {
    const BuiltinCode& builtin = builtin_codes()[static_cast<size_t>(spec.code_id - 1)];
    const CyclicCode code = CyclicCode::build(builtin.gens);
    const ThetaParam& tp = code.ring();
    const BruteForce bf(code, word_cap);

    ClassificationResult r;
    r.row = spec.row;
    r.code_id = spec.code_id;
    r.theta = builtin.gens.theta;
    r.n = builtin.gens.n;

    const ReversibilityReport rev = check_theorem2(code);
    r.reversible = rev.verdict;
    bool agree = rev.verdict == bf.reversible();

    if (spec.pair) {
      const ComplementPair cp =
          ComplementPair::make(spec.pair->first, spec.pair->second, tp);
      r.pair_u = to_text(cp.u);
      r.pair_t = to_text(cp.t);
      const RevCompReport rc = check_rev_comp(code, cp);
      r.rev_comp = rc.verdict;
      agree = agree && (rc.verdict == bf.rev_comp(cp));
    } else {
      r.pair_u = "all";
      r.pair_t = "all";
      bool all = true;
      for (const RevCompReport& rc : check_all_pairs(code)) {
        all = all && rc.verdict;
        agree = agree && (rc.verdict == bf.rev_comp(rc.pair));
      }
      r.rev_comp = all;
    }
    r.oracle_agrees = agree;
    out.push_back(std::move(r));
  }
  return out;
}

std::string classification_csv(const std::vector<ClassificationResult>& rows) {
  std::ostringstream os;
  os << "example_id,theta,n,reversible,pair_u,pair_t,rev_comp,oracle_agrees\n";
  for (const auto& r : rows) {
    os << r.code_id << ',' << to_text(r.theta) << ',' << r.n << ','
       << (r.reversible ? "Yes" : "No") << ',' << r.pair_u << ',' << r.pair_t
       << ',' << (r.rev_comp ? "Yes" : "No") << ','
       << (r.oracle_agrees ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string classification_json(const std::vector<ClassificationResult>& rows,
                                int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"row", r.row},
                   {"example_id", r.code_id},
                   {"theta", to_text(r.theta)},
                   {"n", r.n},
                   {"reversible", r.reversible},
                   {"pair_u", r.pair_u},
                   {"pair_t", r.pair_t},
                   {"rev_comp", r.rev_comp},
                   {"oracle_agrees", r.oracle_agrees}});
  }
  return arr.dump(indent);
}

}  // namespace rtheta

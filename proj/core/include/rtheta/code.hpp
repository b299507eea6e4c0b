#pragma once

#include <array>
#include <vector>

#include "rtheta/howell.hpp"
#include "rtheta/poly.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

// The ten binary polynomials of the canonical four-generator presentation of
// a cyclic code over R_theta, together with the length and ring parameter.
//
// The four generators assemble as
//   G1 = g11 + 2 g12 + k g13 + 2k g14
//   G2 = 2 g22 + k g23 + 2k g24
//   G3 = k (g33 + 2 g34)
//   G4 = 2k g44
// subject to g22 | g11 | z^n-1, g44 | g33 | z^n-1,
// g22 | g12 (z^n-1)/g11, g44 | g34 (z^n-1)/g33, and deg g_ij < deg g_jj for
// the off-diagonal entries (zero polynomials excepted). A zero diagonal
// drops the whole generator: g_jj = 0 forces the rest of its row to zero.
struct CanonicalGenerators {
  int n = 0;
  RTheta theta;
  BinPoly g11, g12, g13, g14;
  BinPoly g22, g23, g24;
  BinPoly g33, g34;
  BinPoly g44;

  // Validates every constraint; throws ValidationError naming the offender.
  static CanonicalGenerators make(int n, RTheta theta, BinPoly g11, BinPoly g12,
                                  BinPoly g13, BinPoly g14, BinPoly g22,
                                  BinPoly g23, BinPoly g24, BinPoly g33,
                                  BinPoly g34, BinPoly g44);

  // g13 + 2 g14 and g23 + 2 g24 over Z4.
  Z4Poly gbar1() const { return plus_double(g13, g14); }
  Z4Poly gbar2() const { return plus_double(g23, g24); }

  friend bool operator==(const CanonicalGenerators&,
                         const CanonicalGenerators&) = default;
};

// Validation without construction; throws on the first violated constraint.
void validate(const CanonicalGenerators& g);

// A Z4 cyclic code <g + 2p, 2a> given by its binary triple.
struct Z4Triple {
  BinPoly g, p, a;
  Z4Poly main() const { return plus_double(g, p); }
  Z4Poly two_part() const { return scale(lift(a), Z4{2}); }
  friend bool operator==(const Z4Triple&, const Z4Triple&) = default;
};

// A built cyclic code: the four assembled generators, the Z4^{2n} module in
// the (1, v) basis, and the residue/torsion Z4 codes over Z4^n. Immutable.
class CyclicCode {
 public:
  // Validates the generator constraints and checks that the presentation is
  // consistent with the module it generates: Tor(C) must equal
  // <g33 + 2 g34, 2 g44>, and the residue/torsion pairs must be in canonical
  // position (their doubling torsions are <g22> resp. <g44>). Throws
  // ValidationError otherwise.
  static CyclicCode build(const CanonicalGenerators& gens);

  const CanonicalGenerators& gens() const { return gens_; }
  const ThetaParam& ring() const { return *tp_; }
  int n() const { return gens_.n; }

  // G1..G4; zero entries for dropped generators.
  const std::array<RPoly, 4>& generator_polys() const { return gen_polys_; }

  // Howell form over Z4^{2n}, coordinates (a-part | b-part) in the (1, v)
  // basis, blocked by coefficient index.
  const HowellForm& module() const { return module_; }

  // phi_theta(C) = <g11 + 2 g12, 2 g22> over Z4^n.
  const HowellForm& phi_module() const { return phi_mod_; }
  Z4Triple phi_triple() const { return {gens_.g11, gens_.g12, gens_.g22}; }

  // Tor(C) = <g33 + 2 g34, 2 g44> over Z4^n.
  const HowellForm& torsion_module() const { return tor_mod_; }
  Z4Triple torsion_triple() const { return {gens_.g33, gens_.g34, gens_.g44}; }

  // Howell form in the (1, k) basis, coordinates (phi-part | k-part). The
  // rows with pivot >= n are exactly a basis of ker_theta.
  const HowellForm& k_basis_module() const { return kmod_; }

  // Ideal membership. Throws ValidationError when deg s >= n.
  bool member(const RPoly& s) const;
  // Combination coefficients over the module rows, or nullopt.
  std::optional<std::vector<uint8_t>> member_certificate(const RPoly& s) const;

  // Length-2n vector (a-part | b-part) of a degree < n polynomial.
  Z4Vec embed(const RPoly& s) const;
  RPoly unembed(const Z4Vec& v) const;

  int size_log2() const { return module_.size_log2(); }

 private:
  CyclicCode() = default;

  CanonicalGenerators gens_;
  const ThetaParam* tp_ = nullptr;
  std::array<RPoly, 4> gen_polys_;
  HowellForm module_;
  HowellForm kmod_;
  HowellForm phi_mod_;
  HowellForm tor_mod_;
};

// Howell form over Z4^n of the Z4 cyclic code spanned by the shifts of the
// given polynomials.
HowellForm z4_code_module(const std::vector<Z4Poly>& gens, int n);

// Canonical binary triple (g, p, a) of a shift-closed Z4 module:
// g generates the residue, a the doubling torsion {b : 2b in D}, and p is the
// unique offset with g + 2p in D and deg p < deg a. Throws ExtractionError
// when D admits no presentation satisfying the divisibility constraints.
Z4Triple extract_z4_triple(const HowellForm& d, int n);

// Recover the unique CanonicalGenerators presenting the cyclic code
// generated by raw (closed under z and v multiplication). Throws
// ExtractionError when the module defeats extraction.
CanonicalGenerators canonicalize(const std::vector<RPoly>& raw, int n,
                                 RTheta theta);

}  // namespace rtheta

#include "rtheta/reversibility.hpp"

#include "rtheta/io.hpp"

namespace rtheta {

namespace {

int wrap_exponent(int e, int n) {
  return ((e % n) + n) % n;
}

// z^e p* - p reduced mod z^n - 1, over Z4.
Z4Poly shifted_reciprocal_difference(const Z4Poly& p, int e, int n) {
  return reduce_mod_zn1(sub(shifted(reciprocal(p), e), p), n);
}

std::string cert_text(const std::optional<std::vector<uint8_t>>& cert) {
  if (!cert) return "no combination";
  std::string s = "combination";
  bool any = false;
  for (size_t i = 0; i < cert->size(); ++i) {
    if ((*cert)[i] == 0) continue;
    s += (any ? " + " : " ") + std::to_string(int((*cert)[i])) + "*row" +
         std::to_string(i);
    any = true;
  }
  if (!any) s += " 0";
  return s;
}

}  // namespace

bool z4_reversible(const BinPoly& g, const BinPoly& p, const BinPoly& a, int n) {
  const BinPoly zn1 = zn_minus_1(n);
  if (!divides(a, g)) throw ValidationError("z4_reversible: a | g fails");
  if (!g.is_zero() && !divides(g, zn1)) {
    throw ValidationError("z4_reversible: g | z^n-1 fails");
  }
  if (!a.is_zero() && !divides(a, zn1)) {
    throw ValidationError("z4_reversible: a | z^n-1 fails");
  }
  if (!p.is_zero()) {
    if (g.is_zero()) throw ValidationError("z4_reversible: p != 0 with g = 0");
    const BinPoly h = divmod(zn1, g).first;
    if (!divides(a, mul(p, h))) {
      throw ValidationError("z4_reversible: a | p (z^n-1)/g fails");
    }
    if (!(a.is_zero() ? false : *p.degree() < *a.degree())) {
      throw ValidationError("z4_reversible: deg a > deg p fails");
    }
  }

  if (!is_self_reciprocal(g) || !is_self_reciprocal(a)) return false;
  if (p.is_zero()) return true;
  const int lambda = *g.degree() - *p.degree();
  return divides(a, add(shifted(reciprocal(p), lambda), p));
}

ReversibilityReport check_theorem2(const CyclicCode& c) {
  const CanonicalGenerators& g = c.gens();
  const ThetaParam& tp = c.ring();
  const int n = c.n();
  ReversibilityReport r;

  const Z4Poly gbar1 = g.gbar1();
  const Z4Poly gbar2 = g.gbar2();

  r.alpha = g.g33.degree_or(0) - g.g34.degree_or(0);
  r.beta = g.g11.degree_or(0) - g.g12.degree_or(0);
  r.gamma = g.g11.degree_or(0) - gbar1.degree_or(0);
  r.delta = g.g22.degree_or(0) - gbar2.degree_or(0);

  // (i): the binary diagonal polynomials are self reciprocal.
  {
    r.cond_i.holds = true;
    const std::pair<const char*, const BinPoly*> diag[] = {
        {"g11", &g.g11}, {"g22", &g.g22}, {"g33", &g.g33}, {"g44", &g.g44}};
    for (const auto& [name, p] : diag) {
      if (!is_self_reciprocal(*p)) {
        r.cond_i.holds = false;
        if (!r.cond_i.witness.empty()) r.cond_i.witness += "; ";
        r.cond_i.witness += std::string(name) + " = " + to_text(*p) +
                            " is not self-reciprocal";
      }
    }
    if (r.cond_i.holds) r.cond_i.witness = "g11, g22, g33, g44 self-reciprocal";
  }

  // (ii): g44 | z^alpha g34* - g34 over Z2; vacuous for g34 = 0.
  if (g.g34.is_zero()) {
    r.cond_ii.holds = true;
    r.cond_ii.witness = "g34 = 0 (vacuous)";
  } else {
    const int alpha = *g.g33.degree() - *g.g34.degree();  // > 0 by validation
    const BinPoly expr = add(shifted(reciprocal(g.g34), alpha), g.g34);
    r.cond_ii.holds = divides(g.g44, expr);
    r.cond_ii.witness = "z^" + std::to_string(alpha) + " g34* - g34 = " +
                        to_text(expr) + (r.cond_ii.holds ? "" : " not") +
                        " divisible by g44";
  }

  // (iii): 2(z^beta g12* - g12) + k (z^gamma gbar1* - gbar1) in C. Exponents
  // act in the quotient ring, where z is a unit.
  {
    Z4Poly part2;
    if (!g.g12.is_zero()) {
      const int beta = *g.g11.degree() - *g.g12.degree();  // > 0 by validation
      part2 = scale(shifted_reciprocal_difference(lift(g.g12), beta, n), Z4{2});
    }
    Z4Poly partk;
    if (!gbar1.is_zero()) {
      const int e = wrap_exponent(g.g11.degree_or(0) - *gbar1.degree(), n);
      partk = shifted_reciprocal_difference(gbar1, e, n);
    }
    const RPoly expr = combine_r_plus_ks(part2, partk, tp.k());
    const auto cert = c.member_certificate(expr);
    r.cond_iii.holds = cert.has_value();
    r.cond_iii.witness = to_text(expr) +
                         (r.cond_iii.holds ? " in C: " + cert_text(cert)
                                           : " not in C");
  }

  // (iv): z^delta gbar2* - gbar2 in Tor(C).
  if (gbar2.is_zero()) {
    r.cond_iv.holds = true;
    r.cond_iv.witness = "gbar2 = 0 (vacuous)";
  } else {
    const int e = wrap_exponent(g.g22.degree_or(0) - *gbar2.degree(), n);
    const Z4Poly expr = shifted_reciprocal_difference(gbar2, e, n);
    Z4Vec v(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < expr.length(); ++i) v[i] = expr.coeff(i).v;
    const auto cert = c.torsion_module().express(v);
    r.cond_iv.holds = cert.has_value();
    r.cond_iv.witness = to_text(expr) +
                        (r.cond_iv.holds ? " in Tor(C): " + cert_text(cert)
                                         : " not in Tor(C)");
  }

  r.verdict =
      r.cond_i.holds && r.cond_ii.holds && r.cond_iii.holds && r.cond_iv.holds;
  return r;
}

bool torsion_reversible_consequence(const CyclicCode& c) {
  const CanonicalGenerators& g = c.gens();
  return z4_reversible(g.g33, g.g34, g.g44, c.n());
}

bool phi_reversible_consequence(const CyclicCode& c) {
  const CanonicalGenerators& g = c.gens();
  return z4_reversible(g.g11, g.g12, g.g22, c.n());
}

}  // namespace rtheta

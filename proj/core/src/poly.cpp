#include "rtheta/poly.hpp"

namespace rtheta {

std::pair<BinPoly, BinPoly> divmod(const BinPoly& p, const BinPoly& d) {
  if (d.is_zero()) {
    throw ValidationError("divmod: division by the zero polynomial");
  }
  std::vector<Z2> rem(p.coeffs());
  const int dd = *d.degree();
  std::vector<Z2> quo;
  if (static_cast<int>(rem.size()) - 1 >= dd) {
    quo.assign(rem.size() - dd, Z2{});
  }
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].v == 0) continue;
    quo[i - dd] = Z2{1};
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] = add(rem[i - dd + j], d.coeff(j));
    }
  }
  return {BinPoly::from_coeffs(std::move(quo)), BinPoly::from_coeffs(std::move(rem))};
}

bool divides(const BinPoly& d, const BinPoly& p) {
  if (p.is_zero()) return true;
  if (d.is_zero()) return false;
  return divmod(p, d).second.is_zero();
}

BinPoly gcd(const BinPoly& p, const BinPoly& q) {
  BinPoly a = p, b = q;
  while (!b.is_zero()) {
    BinPoly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

BinPoly zn_minus_1(int n) {
  std::vector<Z2> c(static_cast<size_t>(n) + 1);
  c[0] = Z2{1};
  c[static_cast<size_t>(n)] = Z2{1};
  return BinPoly::from_coeffs(std::move(c));
}

std::vector<BinPoly> divisors_of_zn1(int n) {
  const BinPoly m = zn_minus_1(n);
  std::vector<BinPoly> out;
  for (int deg = 0; deg < n; ++deg) {
    // Divisors of z^n+1 have constant term 1, so scan only odd masks.
    const uint64_t top = uint64_t(1) << deg;
    for (uint64_t mask = 1; mask < top; mask += 2) {
      std::vector<Z2> c(static_cast<size_t>(deg) + 1);
      for (int i = 0; i < deg; ++i) c[i] = Z2{static_cast<uint8_t>((mask >> i) & 1)};
      c[static_cast<size_t>(deg)] = Z2{1};
      BinPoly d = BinPoly::from_coeffs(std::move(c));
      if (divides(d, m)) out.push_back(std::move(d));
    }
    if (deg == 0) out.push_back(BinPoly::from_coeffs({Z2{1}}));
  }
  return out;
}

Z4Poly lift(const BinPoly& p) {
  std::vector<Z4> c(p.length());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Z4{p.coeff(i).v};
  return Z4Poly::from_coeffs(std::move(c));
}

BinPoly mod2(const Z4Poly& p) {
  std::vector<Z2> c(p.length());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Z2{static_cast<uint8_t>(p.coeff(i).v & 1)};
  return BinPoly::from_coeffs(std::move(c));
}

Z4Poly plus_double(const BinPoly& g, const BinPoly& p) {
  std::vector<Z4> c(std::max(g.length(), p.length()));
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = Z4{static_cast<uint8_t>((g.coeff(i).v + 2 * p.coeff(i).v) & 3)};
  }
  return Z4Poly::from_coeffs(std::move(c));
}

RPoly embed_z4(const Z4Poly& p) {
  std::vector<RTheta> c(p.length());
  for (size_t i = 0; i < c.size(); ++i) c[i] = RTheta{p.coeff(i).v, 0};
  return RPoly::from_coeffs(std::move(c));
}

Z4Poly scale(const Z4Poly& p, Z4 c) {
  std::vector<Z4> out(p.length());
  for (size_t i = 0; i < out.size(); ++i) out[i] = mul(p.coeff(i), c);
  return Z4Poly::from_coeffs(std::move(out));
}

RPoly scale(const RPoly& p, const RTheta& c, const ThetaParam& tp) {
  std::vector<RTheta> out(p.length());
  for (size_t i = 0; i < out.size(); ++i) out[i] = tp.mul(p.coeff(i), c);
  return RPoly::from_coeffs(std::move(out));
}

RPoly combine_r_plus_ks(const Z4Poly& r, const Z4Poly& s, const RTheta& k) {
  std::vector<RTheta> c(std::max(r.length(), s.length()));
  for (size_t i = 0; i < c.size(); ++i) {
    const uint8_t sv = s.coeff(i).v;
    c[i] = RTheta{static_cast<uint8_t>((r.coeff(i).v + sv * k.a) & 3),
                  static_cast<uint8_t>((sv * k.b) & 3)};
  }
  return RPoly::from_coeffs(std::move(c));
}

}  // namespace rtheta

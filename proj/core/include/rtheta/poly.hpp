#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "rtheta/errors.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

// Dense polynomial over one of the three coefficient rings, constant term
// first. The representation is always trimmed: the zero polynomial is the
// empty vector and a nonzero polynomial has a nonzero leading coefficient.
// Values are immutable once constructed.
template <class E>
class Poly {
 public:
  Poly() = default;

  static Poly from_coeffs(std::vector<E> c) {
    while (!c.empty() && rtheta::is_zero(c.back())) c.pop_back();
    Poly p;
    p.c_ = std::move(c);
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  // Degree of the zero polynomial is undefined and reported as nullopt.
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  // Degree with a caller-chosen answer for the zero polynomial.
  int degree_or(int fallback) const {
    return c_.empty() ? fallback : static_cast<int>(c_.size()) - 1;
  }

  E coeff(size_t i) const { return i < c_.size() ? c_[i] : E{}; }
  const std::vector<E>& coeffs() const { return c_; }
  size_t length() const { return c_.size(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<E> c_;
};

using BinPoly = Poly<Z2>;
using Z4Poly = Poly<Z4>;
using RPoly = Poly<RTheta>;

template <class E>
Poly<E> add(const Poly<E>& p, const Poly<E>& q) {
  std::vector<E> c(std::max(p.length(), q.length()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = add(p.coeff(i), q.coeff(i));
  return Poly<E>::from_coeffs(std::move(c));
}

template <class E>
Poly<E> sub(const Poly<E>& p, const Poly<E>& q) {
  std::vector<E> c(std::max(p.length(), q.length()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = sub(p.coeff(i), q.coeff(i));
  return Poly<E>::from_coeffs(std::move(c));
}

template <class E>
Poly<E> neg(const Poly<E>& p) {
  std::vector<E> c(p.coeffs());
  for (auto& x : c) x = neg(x);
  return Poly<E>::from_coeffs(std::move(c));
}

// Plain product; R_theta needs its ThetaParam as trailing context.
template <class E, class... Ctx>
Poly<E> mul(const Poly<E>& p, const Poly<E>& q, const Ctx&... ctx) {
  if (p.is_zero() || q.is_zero()) return Poly<E>{};
  std::vector<E> c(p.length() + q.length() - 1);
  for (size_t i = 0; i < p.length(); ++i) {
    if (is_zero(p.coeff(i))) continue;
    for (size_t j = 0; j < q.length(); ++j) {
      c[i + j] = add(c[i + j], mul(p.coeff(i), q.coeff(j), ctx...));
    }
  }
  return Poly<E>::from_coeffs(std::move(c));
}

// z^j * p, no reduction.
template <class E>
Poly<E> shifted(const Poly<E>& p, int j) {
  if (p.is_zero()) return p;
  std::vector<E> c(p.length() + static_cast<size_t>(j));
  for (size_t i = 0; i < p.length(); ++i) c[i + j] = p.coeff(i);
  return Poly<E>::from_coeffs(std::move(c));
}

// Reduce mod z^n - 1: coefficient of z^{n+j} folds onto z^j.
template <class E>
Poly<E> reduce_mod_zn1(const Poly<E>& p, int n) {
  if (p.degree_or(-1) < n) return p;
  std::vector<E> c(static_cast<size_t>(n));
  for (size_t i = 0; i < p.length(); ++i) {
    c[i % n] = add(c[i % n], p.coeff(i));
  }
  return Poly<E>::from_coeffs(std::move(c));
}

template <class E, class... Ctx>
Poly<E> mul_mod(const Poly<E>& p, const Poly<E>& q, int n, const Ctx&... ctx) {
  return reduce_mod_zn1(mul(p, q, ctx...), n);
}

// g*(z) = z^{deg g} g(1/z): the reversed coefficient vector, trimmed.
// The reciprocal of the zero polynomial is zero by convention.
template <class E>
Poly<E> reciprocal(const Poly<E>& p) {
  std::vector<E> c(p.coeffs());
  std::reverse(c.begin(), c.end());
  return Poly<E>::from_coeffs(std::move(c));
}

template <class E>
bool is_self_reciprocal(const Poly<E>& p) {
  return reciprocal(p) == p;
}

// s^r(z) = z^{n-1-deg s} s*(z): coefficient i of the result is coefficient
// n-1-i of s viewed as a length-n vector. Total on degree <= n-1 inputs.
template <class E>
Poly<E> reverse_in_ring(const Poly<E>& p, int n) {
  if (p.degree_or(-1) >= n) {
    throw ValidationError("reverse_in_ring: degree " +
                          std::to_string(p.degree_or(-1)) +
                          " >= length n = " + std::to_string(n));
  }
  std::vector<E> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = p.coeff(static_cast<size_t>(n - 1 - i));
  return Poly<E>::from_coeffs(std::move(c));
}

// Binary long division. d must be nonzero.
std::pair<BinPoly, BinPoly> divmod(const BinPoly& p, const BinPoly& d);

// Divisibility over Z2 via long division. Everything divides the zero
// polynomial; the zero polynomial divides only zero.
bool divides(const BinPoly& d, const BinPoly& p);

BinPoly gcd(const BinPoly& p, const BinPoly& q);

// z^n - 1 over Z2, i.e. z^n + 1.
BinPoly zn_minus_1(int n);

// All nonzero divisors of z^n - 1 over Z2 of degree < n, ordered by degree
// then lexicographically on coefficients.
std::vector<BinPoly> divisors_of_zn1(int n);

// --- conversions between the coefficient rings ---

Z4Poly lift(const BinPoly& p);                       // {0,1} coefficients
BinPoly mod2(const Z4Poly& p);                       // coefficientwise mod 2
Z4Poly plus_double(const BinPoly& g, const BinPoly& p);  // g + 2p over Z4
RPoly embed_z4(const Z4Poly& p);                     // b-part zero
Z4Poly scale(const Z4Poly& p, Z4 c);
RPoly scale(const RPoly& p, const RTheta& c, const ThetaParam& tp);

// r + k*s assembled coefficientwise, with r, s over Z4.
RPoly combine_r_plus_ks(const Z4Poly& r, const Z4Poly& s, const RTheta& k);

}  // namespace rtheta

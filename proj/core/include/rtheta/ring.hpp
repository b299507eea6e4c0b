#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rtheta/errors.hpp"

namespace rtheta {

// Scalar in Z2 = {0,1}.
struct Z2 {
  uint8_t v = 0;
  friend bool operator==(const Z2&, const Z2&) = default;
};

// Scalar in Z4 = {0,1,2,3}.
struct Z4 {
  uint8_t v = 0;
  friend bool operator==(const Z4&, const Z4&) = default;
};

// Element a + b*v of R_theta = Z4 + v*Z4, stored in the (1, v) basis.
struct RTheta {
  uint8_t a = 0;
  uint8_t b = 0;
  friend bool operator==(const RTheta&, const RTheta&) = default;

  // Index into the 16-element tables, lexicographic on (a, b).
  constexpr uint8_t index() const { return static_cast<uint8_t>(a * 4 + b); }
  static constexpr RTheta from_index(uint8_t i) {
    return RTheta{static_cast<uint8_t>(i / 4), static_cast<uint8_t>(i % 4)};
  }
  bool is_zero() const { return a == 0 && b == 0; }
};

inline bool is_zero(Z2 x) { return x.v == 0; }
inline bool is_zero(Z4 x) { return x.v == 0; }
inline bool is_zero(const RTheta& x) { return x.is_zero(); }

inline Z2 add(Z2 x, Z2 y) { return Z2{static_cast<uint8_t>(x.v ^ y.v)}; }
inline Z2 sub(Z2 x, Z2 y) { return add(x, y); }
inline Z2 neg(Z2 x) { return x; }
inline Z2 mul(Z2 x, Z2 y) { return Z2{static_cast<uint8_t>(x.v & y.v)}; }

inline Z4 add(Z4 x, Z4 y) { return Z4{static_cast<uint8_t>((x.v + y.v) & 3)}; }
inline Z4 sub(Z4 x, Z4 y) { return Z4{static_cast<uint8_t>((x.v - y.v) & 3)}; }
inline Z4 neg(Z4 x) { return Z4{static_cast<uint8_t>((4 - x.v) & 3)}; }
inline Z4 mul(Z4 x, Z4 y) { return Z4{static_cast<uint8_t>((x.v * y.v) & 3)}; }

inline RTheta add(const RTheta& x, const RTheta& y) {
  return RTheta{static_cast<uint8_t>((x.a + y.a) & 3),
                static_cast<uint8_t>((x.b + y.b) & 3)};
}
inline RTheta sub(const RTheta& x, const RTheta& y) {
  return RTheta{static_cast<uint8_t>((x.a - y.a) & 3),
                static_cast<uint8_t>((x.b - y.b) & 3)};
}
inline RTheta neg(const RTheta& x) {
  return RTheta{static_cast<uint8_t>((4 - x.a) & 3),
                static_cast<uint8_t>((4 - x.b) & 3)};
}

class ThetaParam;

// (u, t) with u a unit, u^2 = 1 and u*t = t. Only constructible through
// ComplementPair::make or ThetaParam::complement_pairs, so a value in hand is
// always valid for its ring.
struct ComplementPair {
  RTheta u;
  RTheta t;
  static ComplementPair make(RTheta u, RTheta t, const ThetaParam& tp);
  friend bool operator==(const ComplementPair&, const ComplementPair&) = default;

 private:
  ComplementPair(RTheta u_, RTheta t_) : u(u_), t(t_) {}
  friend class ThetaParam;
};

// One of the eight admissible values of v^2 together with every derived
// table: multiplication, phi_theta, units and the valid complement pairs.
// Instances are interned; get() hands out references with static lifetime.
class ThetaParam {
 public:
  // Throws InvalidThetaError unless theta is one of the eight non-chain
  // values S = {0, v, 2v, 3v, 1, 3+2v, 2+v, 2+3v}.
  static const ThetaParam& get(RTheta theta);

  // S in the order above.
  static const std::array<RTheta, 8>& admissible();
  static bool is_admissible(RTheta theta);

  RTheta theta() const { return theta_; }
  RTheta k() const { return k_; }

  RTheta mul(const RTheta& x, const RTheta& y) const {
    return mul_[x.index() * 16 + y.index()];
  }
  // x mod k_theta, the canonical image in Z4.
  Z4 phi(const RTheta& x) const { return Z4{phi_[x.index()]}; }

  bool is_unit(const RTheta& x) const { return inv_[x.index()] != kNoInverse; }
  // Throws ValidationError when x is not a unit.
  RTheta inverse(const RTheta& x) const;

  // All (u, t) with u^2 = 1 and u*t = t, lexicographic on (u.a, u.b, t.a, t.b).
  const std::vector<ComplementPair>& complement_pairs() const { return pairs_; }

  ThetaParam(const ThetaParam&) = delete;
  ThetaParam& operator=(const ThetaParam&) = delete;

 private:
  explicit ThetaParam(RTheta theta);

  static constexpr uint8_t kNoInverse = 0xff;

  RTheta theta_;
  RTheta k_;
  std::array<RTheta, 256> mul_;
  std::array<uint8_t, 16> phi_;
  std::array<uint8_t, 16> inv_;
  std::vector<ComplementPair> pairs_;
};

inline RTheta mul(const RTheta& x, const RTheta& y, const ThetaParam& tp) {
  return tp.mul(x, y);
}

// The (u,t)-complement of x: the unique y with x + u*y = t, i.e.
// y = u^{-1}(t - x). Since u^2 = 1, u^{-1} = u.
RTheta complement(const RTheta& x, const ComplementPair& cp, const ThetaParam& tp);

}  // namespace rtheta

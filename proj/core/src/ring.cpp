#include "rtheta/ring.hpp"

#include <algorithm>
#include <string>

namespace rtheta {

namespace {

std::string element_text(const RTheta& x) {
  // Minimal local formatter for error messages; the full one lives in io.
  std::string s;
  if (x.a != 0 || x.b == 0) s += std::to_string(int(x.a));
  if (x.b != 0) {
    if (!s.empty()) s += "+";
    if (x.b != 1) s += std::to_string(int(x.b)) + "*";
    s += "v";
  }
  return s;
}

}  // namespace

const std::array<RTheta, 8>& ThetaParam::admissible() {
  // S = {0, v, 2v, 3v, 1, 3+2v, 2+v, 2+3v}
  static const std::array<RTheta, 8> s = {
      RTheta{0, 0}, RTheta{0, 1}, RTheta{0, 2}, RTheta{0, 3},
      RTheta{1, 0}, RTheta{3, 2}, RTheta{2, 1}, RTheta{2, 3},
  };
  return s;
}

bool ThetaParam::is_admissible(RTheta theta) {
  const auto& s = admissible();
  return std::find(s.begin(), s.end(), theta) != s.end();
}

const ThetaParam& ThetaParam::get(RTheta theta) {
  if (!is_admissible(theta)) {
    throw InvalidThetaError("invalid theta " + element_text(theta) +
                            ": non-chain theta required (v^2 must lie in "
                            "{0, v, 2*v, 3*v, 1, 3+2*v, 2+v, 2+3*v})");
  }
  const auto& s = admissible();
  static const ThetaParam instances[8] = {
      ThetaParam(s[0]), ThetaParam(s[1]), ThetaParam(s[2]), ThetaParam(s[3]),
      ThetaParam(s[4]), ThetaParam(s[5]), ThetaParam(s[6]), ThetaParam(s[7])};
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == theta) return instances[i];
  }
  throw InvalidThetaError("unreachable");
}

ThetaParam::ThetaParam(RTheta theta) : theta_(theta) {
  // k_theta by the case table.
  if (theta.a == 0) {
    k_ = RTheta{0, 1};  // v
  } else if (theta == RTheta{1, 0} || theta == RTheta{3, 2}) {
    k_ = RTheta{1, 1};  // 1+v
  } else {
    k_ = RTheta{2, 1};  // 2+v
  }

  // (a+bv)(c+dv) = (ac + bd*theta.a) + (ad + bc + bd*theta.b) v.
  for (int xi = 0; xi < 16; ++xi) {
    const RTheta x = RTheta::from_index(static_cast<uint8_t>(xi));
    for (int yi = 0; yi < 16; ++yi) {
      const RTheta y = RTheta::from_index(static_cast<uint8_t>(yi));
      const int bd = x.b * y.b;
      mul_[xi * 16 + yi] =
          RTheta{static_cast<uint8_t>((x.a * y.a + bd * theta.a) & 3),
                 static_cast<uint8_t>((x.a * y.b + x.b * y.a + bd * theta.b) & 3)};
    }
  }

  inv_.fill(kNoInverse);
  for (int xi = 0; xi < 16; ++xi) {
    for (int yi = 0; yi < 16; ++yi) {
      if (mul_[xi * 16 + yi] == RTheta{1, 0}) {
        inv_[xi] = static_cast<uint8_t>(yi);
        break;
      }
    }
  }

  // phi(x) is the unique r in {0..3} with x - r in the ideal k*R.
  std::array<bool, 16> in_ideal{};
  for (int yi = 0; yi < 16; ++yi) {
    in_ideal[mul_[k_.index() * 16 + yi].index()] = true;
  }
  for (int xi = 0; xi < 16; ++xi) {
    const RTheta x = RTheta::from_index(static_cast<uint8_t>(xi));
    int found = -1;
    for (uint8_t r = 0; r < 4; ++r) {
      if (in_ideal[sub(x, RTheta{r, 0}).index()]) {
        if (found >= 0) {
          throw Error("phi table construction: coset representative not unique");
        }
        found = r;
      }
    }
    if (found < 0) {
      throw Error("phi table construction: no coset representative");
    }
    phi_[xi] = static_cast<uint8_t>(found);
  }

  for (uint8_t ua = 0; ua < 4; ++ua) {
    for (uint8_t ub = 0; ub < 4; ++ub) {
      const RTheta u{ua, ub};
      if (!is_unit(u) || !(mul(u, u) == RTheta{1, 0})) continue;
      for (uint8_t ta = 0; ta < 4; ++ta) {
        for (uint8_t tb = 0; tb < 4; ++tb) {
          const RTheta t{ta, tb};
          if (mul(u, t) == t) pairs_.push_back(ComplementPair(u, t));
        }
      }
    }
  }
}

RTheta ThetaParam::inverse(const RTheta& x) const {
  const uint8_t yi = inv_[x.index()];
  if (yi == kNoInverse) {
    throw ValidationError("element " + element_text(x) + " is not a unit");
  }
  return RTheta::from_index(yi);
}

ComplementPair ComplementPair::make(RTheta u, RTheta t, const ThetaParam& tp) {
  if (!tp.is_unit(u) || !(tp.mul(u, u) == RTheta{1, 0})) {
    throw InvalidPairError("invalid pair: u = " + element_text(u) +
                           " does not satisfy u^2 = 1");
  }
  if (!(tp.mul(u, t) == t)) {
    throw InvalidPairError("invalid pair (u = " + element_text(u) +
                           ", t = " + element_text(t) +
                           "): u*t = t fails");
  }
  // u^2 = 1 makes u self-inverse.
  if (!(tp.inverse(u) == u)) {
    throw Error("internal: u^2 = 1 but inverse(u) != u");
  }
  return ComplementPair(u, t);
}

RTheta complement(const RTheta& x, const ComplementPair& cp, const ThetaParam& tp) {
  return tp.mul(cp.u, sub(cp.t, x));
}

}  // namespace rtheta

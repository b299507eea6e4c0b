#include "rtheta/oracle.hpp"

#include <algorithm>
#include <random>

namespace rtheta {

namespace {

uint64_t pack_embedded(const Z4Vec& v, int n) {
  uint64_t w = 0;
  for (int i = 0; i < n; ++i) {
    w |= (uint64_t(v[static_cast<size_t>(i)]) |
          (uint64_t(v[static_cast<size_t>(n + i)]) << 2))
         << (4 * i);
  }
  return w;
}

Z4Vec random_span_element(const HowellForm& h, std::mt19937_64& rng) {
  Z4Vec w(h.width(), 0);
  for (const auto& row : h.rows()) {
    const uint8_t c = static_cast<uint8_t>(
        rng() % (row.pivot_val == 1 ? 4 : 2));
    if (c == 0) continue;
    for (size_t j = row.pivot; j < w.size(); ++j) {
      w[j] = static_cast<uint8_t>((w[j] + c * row.v[j]) & 3);
    }
  }
  return w;
}

}  // namespace

BruteForce::BruteForce(const CyclicCode& c, uint64_t word_cap)
    : n_(c.n()), tp_(&c.ring()) {
  if (n_ > 16) {
    throw CapExceededError("brute-force oracle supports n <= 16");
  }
  const int log2 = c.module().size_log2();
  if (log2 >= 64 || (uint64_t(1) << log2) > word_cap) {
    throw CapExceededError("code too large for brute-force enumeration: 2^" +
                           std::to_string(log2) + " words, cap " +
                           std::to_string(word_cap));
  }
  words_.reserve(uint64_t(1) << log2);
  c.module().enumerate_span(word_cap, [&](const Z4Vec& v) {
    words_.push_back(pack_embedded(v, n_));
  });

  // 16^n fits a bitmap for n <= 7; fall back to hashing above that.
  use_bitmap_ = 4 * n_ <= 28;
  if (use_bitmap_) {
    bitmap_.assign((uint64_t(1) << (4 * n_)) / 64, 0);
    for (uint64_t w : words_) bitmap_[w >> 6] |= uint64_t(1) << (w & 63);
  } else {
    set_.reserve(words_.size() * 2);
    set_.insert(words_.begin(), words_.end());
  }
}

bool BruteForce::contains_packed(uint64_t w) const {
  if (use_bitmap_) return (bitmap_[w >> 6] >> (w & 63)) & 1;
  return set_.count(w) != 0;
}

uint64_t BruteForce::reverse_packed(uint64_t w) const {
  uint64_t r = 0;
  for (int i = 0; i < n_; ++i) {
    r |= ((w >> (4 * i)) & 0xf) << (4 * (n_ - 1 - i));
  }
  return r;
}

bool BruteForce::reversible() const {
  for (uint64_t w : words_) {
    if (!contains_packed(reverse_packed(w))) return false;
  }
  return true;
}

bool BruteForce::rev_comp(const ComplementPair& cp) const {
  uint8_t comp[16];
  for (uint8_t i = 0; i < 16; ++i) {
    const RTheta x{static_cast<uint8_t>(i & 3), static_cast<uint8_t>(i >> 2)};
    const RTheta y = complement(x, cp, *tp_);
    comp[i] = static_cast<uint8_t>(y.a | (y.b << 2));
  }
  for (uint64_t w : words_) {
    const uint64_t r = reverse_packed(w);
    uint64_t m = 0;
    for (int i = 0; i < n_; ++i) {
      m |= uint64_t(comp[(r >> (4 * i)) & 0xf]) << (4 * i);
    }
    if (!contains_packed(m)) return false;
  }
  return true;
}

bool brute_reversible(const CyclicCode& c, uint64_t cap) {
  return BruteForce(c, cap).reversible();
}

bool brute_rev_comp(const CyclicCode& c, const ComplementPair& cp,
                    uint64_t cap) {
  return BruteForce(c, cap).rev_comp(cp);
}

bool sampled_reversible(const CyclicCode& c, int trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = c.n();
  for (int t = 0; t < trials; ++t) {
    const Z4Vec v = random_span_element(c.module(), rng);
    Z4Vec rev(v.size());
    for (int i = 0; i < n; ++i) {
      rev[static_cast<size_t>(i)] = v[static_cast<size_t>(n - 1 - i)];
      rev[static_cast<size_t>(n + i)] = v[static_cast<size_t>(2 * n - 1 - i)];
    }
    if (!c.module().contains(rev)) return false;
  }
  return true;
}

bool sampled_rev_comp(const CyclicCode& c, const ComplementPair& cp, int trials,
                      uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = c.n();
  const ThetaParam& tp = c.ring();
  for (int t = 0; t < trials; ++t) {
    const Z4Vec v = random_span_element(c.module(), rng);
    Z4Vec out(v.size());
    for (int i = 0; i < n; ++i) {
      const RTheta x{v[static_cast<size_t>(n - 1 - i)],
                     v[static_cast<size_t>(2 * n - 1 - i)]};
      const RTheta y = complement(x, cp, tp);
      out[static_cast<size_t>(i)] = y.a;
      out[static_cast<size_t>(n + i)] = y.b;
    }
    if (!c.module().contains(out)) return false;
  }
  return true;
}

namespace detail {

namespace {

// All binary polynomials of degree <= bound, the zero polynomial included.
std::vector<BinPoly> polys_up_to(int bound) {
  std::vector<BinPoly> out;
  out.push_back(BinPoly{});
  if (bound < 0) return out;
  for (uint64_t mask = 1; mask < (uint64_t(1) << (bound + 1)); ++mask) {
    std::vector<Z2> c;
    for (int i = 0; i <= bound; ++i) {
      c.push_back(Z2{static_cast<uint8_t>((mask >> i) & 1)});
    }
    out.push_back(BinPoly::from_coeffs(std::move(c)));
  }
  return out;
}

struct RowChoice {
  BinPoly diag;   // g11 or g33
  BinPoly off;    // g12 or g34
  BinPoly lower;  // g22 or g44
};

// All (diag, off, lower) with lower | diag | z^n-1,
// lower | off (z^n-1)/diag and deg off < deg lower.
std::vector<RowChoice> row_choices(int n, const std::vector<BinPoly>& divisors) {
  std::vector<RowChoice> out;
  const BinPoly zn1 = zn_minus_1(n);
  // Absent diagonal: off forced zero, lower free.
  out.push_back({BinPoly{}, BinPoly{}, BinPoly{}});
  for (const BinPoly& lower : divisors) {
    out.push_back({BinPoly{}, BinPoly{}, lower});
  }
  for (const BinPoly& diag : divisors) {
    const BinPoly h = divmod(zn1, diag).first;
    for (const BinPoly& lower : divisors) {
      if (!divides(lower, diag)) continue;
      out.push_back({diag, BinPoly{}, lower});
      for (const BinPoly& off : polys_up_to(*lower.degree() - 1)) {
        if (off.is_zero()) continue;
        if (!divides(lower, mul(off, h))) continue;
        out.push_back({diag, off, lower});
      }
    }
  }
  return out;
}

std::vector<BinPoly> offset_choices(const BinPoly& col_diag, int n,
                                    const GenLimits& lim) {
  int bound = col_diag.is_zero() ? n - 1 : *col_diag.degree() - 1;
  if (lim.max_offset_deg >= 0) bound = std::min(bound, lim.max_offset_deg);
  return polys_up_to(bound);
}

}  // namespace

std::vector<CanonicalGenerators> generate_candidates(int n, RTheta theta,
                                                     const GenLimits& lim) {
  (void)ThetaParam::get(theta);
  const std::vector<BinPoly> divisors = divisors_of_zn1(n);
  const std::vector<RowChoice> top = row_choices(n, divisors);
  const std::vector<RowChoice> bottom = row_choices(n, divisors);

  static const std::vector<BinPoly> zero_only = {BinPoly{}};
  std::vector<CanonicalGenerators> out;
  for (const RowChoice& b : bottom) {
    const std::vector<BinPoly> col3 = offset_choices(b.diag, n, lim);
    const std::vector<BinPoly> col4 = offset_choices(b.lower, n, lim);
    for (const RowChoice& t : top) {
      const bool row1 = !t.diag.is_zero();
      const bool row2 = !t.lower.is_zero();
      for (const BinPoly& g13 : row1 ? col3 : zero_only) {
        for (const BinPoly& g14 : row1 ? col4 : zero_only) {
          for (const BinPoly& g23 : row2 ? col3 : zero_only) {
            for (const BinPoly& g24 : row2 ? col4 : zero_only) {
              CanonicalGenerators g;
              g.n = n;
              g.theta = theta;
              g.g11 = t.diag;
              g.g12 = t.off;
              g.g22 = t.lower;
              g.g13 = g13;
              g.g14 = g14;
              g.g23 = g23;
              g.g24 = g24;
              g.g33 = b.diag;
              g.g34 = b.off;
              g.g44 = b.lower;
              try {
                validate(g);
              } catch (const ValidationError&) {
                continue;
              }
              out.push_back(std::move(g));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

std::vector<CanonicalGenerators> generate_all_codes(int n, RTheta theta,
                                                    const GenLimits& lim) {
  std::vector<CanonicalGenerators> out;
  for (auto& g : detail::generate_candidates(n, theta, lim)) {
    try {
      (void)CyclicCode::build(g);
    } catch (const ValidationError&) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

const BinPoly& pick(const std::vector<BinPoly>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

// Degree-stratified pick: choose an available degree uniformly, then a
// polynomial of that degree, so low-degree (large) codes do not dominate.
BinPoly pick_stratified(const std::vector<BinPoly>& v, std::mt19937_64& rng) {
  std::vector<int> degrees;
  for (const auto& p : v) {
    const int d = p.degree_or(-1);
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) {
      degrees.push_back(d);
    }
  }
  const int d = degrees[rng() % degrees.size()];
  std::vector<BinPoly> bucket;
  for (const auto& p : v) {
    if (p.degree_or(-1) == d) bucket.push_back(p);
  }
  return pick(bucket, rng);
}

}  // namespace

std::vector<CanonicalGenerators> sample_codes(int n, RTheta theta, int count,
                                              uint64_t seed,
                                              const GenLimits& lim) {
  (void)ThetaParam::get(theta);
  std::mt19937_64 rng(seed);
  const std::vector<BinPoly> divisors = divisors_of_zn1(n);
  const BinPoly zn1 = zn_minus_1(n);

  const auto draw_row = [&](BinPoly& diag, BinPoly& off, BinPoly& lower) {
    std::vector<BinPoly> diag_opts = divisors;
    diag_opts.push_back(BinPoly{});
    diag = pick_stratified(diag_opts, rng);
    if (diag.is_zero()) {
      off = BinPoly{};
      std::vector<BinPoly> lower_opts = divisors;
      lower_opts.push_back(BinPoly{});
      lower = pick_stratified(lower_opts, rng);
      return;
    }
    std::vector<BinPoly> lower_opts;
    for (const auto& d : divisors) {
      if (divides(d, diag)) lower_opts.push_back(d);
    }
    lower = pick_stratified(lower_opts, rng);
    const BinPoly h = divmod(zn1, diag).first;
    std::vector<BinPoly> off_opts;
    for (const auto& p : detail::polys_up_to(*lower.degree() - 1)) {
      if (p.is_zero() || divides(lower, mul(p, h))) off_opts.push_back(p);
    }
    off = pick(off_opts, rng);
  };

  std::vector<CanonicalGenerators> out;
  int attempts = 0;
  const int max_attempts = count * 400 + 1000;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > max_attempts) {
      throw Error("sample_codes: rejection sampling budget exhausted");
    }
    CanonicalGenerators g;
    g.n = n;
    g.theta = theta;
    draw_row(g.g11, g.g12, g.g22);
    draw_row(g.g33, g.g34, g.g44);
    const auto col3 = detail::offset_choices(g.g33, n, lim);
    const auto col4 = detail::offset_choices(g.g44, n, lim);
    if (!g.g11.is_zero()) {
      g.g13 = pick(col3, rng);
      g.g14 = pick(col4, rng);
    }
    if (!g.g22.is_zero()) {
      g.g23 = pick(col3, rng);
      g.g24 = pick(col4, rng);
    }
    try {
      validate(g);
      (void)CyclicCode::build(g);
    } catch (const ValidationError&) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace rtheta

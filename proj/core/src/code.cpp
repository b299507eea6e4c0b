#include "rtheta/code.hpp"

#include <algorithm>
#include <string>

namespace rtheta {

namespace {

std::string poly_brief(const BinPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = static_cast<int>(p.length()) - 1; i >= 0; --i) {
    if (p.coeff(static_cast<size_t>(i)).v == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += "1";
    } else if (i == 1) {
      s += "z";
    } else {
      s += "z^" + std::to_string(i);
    }
  }
  return s;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("canonical-form constraint violated: " + what);
}

Z4Vec embed_len_n(const Z4Poly& p, int n) {
  Z4Vec v(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < p.length(); ++i) v[i] = p.coeff(i).v;
  return v;
}

Z4Poly z4_from_range(const Z4Vec& v, size_t from, size_t len) {
  std::vector<Z4> c(len);
  for (size_t i = 0; i < len; ++i) c[i] = Z4{v[from + i]};
  return Z4Poly::from_coeffs(std::move(c));
}

Z4Vec cyclic_shift(const Z4Vec& v) {
  Z4Vec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[(i + 1) % v.size()] = v[i];
  return w;
}

// All cyclic shifts of the length-n coefficient vector of p.
void append_shift_orbit(std::vector<Z4Vec>& rows, const Z4Poly& p, int n) {
  if (p.is_zero()) return;
  Z4Vec v = embed_len_n(p, n);
  for (int i = 0; i < n; ++i) {
    rows.push_back(v);
    v = cyclic_shift(v);
  }
}

// Binary gcd of the mod-2 reductions of the rows of h together with z^n-1;
// the generator of the binary residue code.
BinPoly residue_generator(const HowellForm& h, int n) {
  BinPoly g = zn_minus_1(n);
  for (const auto& row : h.rows()) {
    std::vector<Z2> c(row.v.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Z2{static_cast<uint8_t>(row.v[i] & 1)};
    g = gcd(g, BinPoly::from_coeffs(std::move(c)));
  }
  return g;
}

// Generator of the binary code {b mod 2 : 2b in span(h)} computed with a
// tracked Howell form over 2n columns: rows [2e_j | e_j] and [row | 0].
BinPoly doubling_torsion_generator(const HowellForm& h, int n) {
  const size_t w = static_cast<size_t>(n);
  std::vector<Z4Vec> rows;
  for (int j = 0; j < n; ++j) {
    Z4Vec r(2 * w, 0);
    r[static_cast<size_t>(j)] = 2;
    r[w + static_cast<size_t>(j)] = 1;
    rows.push_back(std::move(r));
  }
  for (const auto& row : h.rows()) {
    Z4Vec r(2 * w, 0);
    std::copy(row.v.begin(), row.v.end(), r.begin());
    rows.push_back(std::move(r));
  }
  const HowellForm tracked = HowellForm::howellize(std::move(rows), 2 * w);
  BinPoly a = zn_minus_1(n);
  for (const auto& row : tracked.rows()) {
    if (row.pivot < w) continue;
    std::vector<Z2> c(w);
    for (size_t i = 0; i < w; ++i) c[i] = Z2{static_cast<uint8_t>(row.v[w + i] & 1)};
    a = gcd(a, BinPoly::from_coeffs(std::move(c)));
  }
  return a;
}

// Solve sum_{i in S} (row_i mod 2) = target over F2; returns the lifted Z4
// combination of the rows, or nullopt when the target is outside the binary
// span.
std::optional<Z4Vec> solve_mod2_combination(const HowellForm& h,
                                            const BinPoly& target, int n) {
  const size_t w = static_cast<size_t>(n);
  struct BasisRow {
    std::vector<uint8_t> bits;  // F2 vector
    Z4Vec lift;                 // matching Z4 combination
    size_t lead;
  };
  std::vector<BasisRow> basis;
  auto reduce = [&](std::vector<uint8_t>& bits, Z4Vec& lift) {
    for (const auto& b : basis) {
      if (bits[b.lead]) {
        for (size_t i = 0; i < w; ++i) bits[i] ^= b.bits[i];
        for (size_t i = 0; i < w; ++i) lift[i] = static_cast<uint8_t>((lift[i] + b.lift[i]) & 3);
      }
    }
  };
  for (const auto& row : h.rows()) {
    std::vector<uint8_t> bits(w);
    for (size_t i = 0; i < w; ++i) bits[i] = static_cast<uint8_t>(row.v[i] & 1);
    Z4Vec lift(row.v);
    reduce(bits, lift);
    const auto it = std::find(bits.begin(), bits.end(), uint8_t{1});
    if (it == bits.end()) continue;
    basis.push_back(BasisRow{std::move(bits), std::move(lift),
                             static_cast<size_t>(it - bits.begin())});
  }
  std::vector<uint8_t> bits(w);
  for (size_t i = 0; i < w; ++i) bits[i] = target.coeff(i).v;
  Z4Vec lift(w, 0);
  // Accumulate the combination matching the target instead of a residual.
  for (const auto& b : basis) {
    if (bits[b.lead]) {
      for (size_t i = 0; i < w; ++i) bits[i] ^= b.bits[i];
      for (size_t i = 0; i < w; ++i) lift[i] = static_cast<uint8_t>((lift[i] + b.lift[i]) & 3);
    }
  }
  if (std::find(bits.begin(), bits.end(), uint8_t{1}) != bits.end()) {
    return std::nullopt;
  }
  return lift;
}

// The unique representative of s modulo the torsion code <g33+2g34, 2g44>
// with deg g13 < deg g33 and deg g14 < deg g44 (unbounded when the
// respective diagonal is zero), split into its binary layers.
std::pair<BinPoly, BinPoly> reduce_offsets(const Z4Poly& s, const Z4Triple& tor) {
  BinPoly low = mod2(s);
  Z4Poly s1 = s;
  if (!tor.g.is_zero()) {
    auto [q, rem] = divmod(low, tor.g);
    low = rem;
    s1 = sub(s1, mul(lift(q), tor.main()));
  }
  Z4Poly diff = sub(s1, lift(low));
  std::vector<Z2> hc(diff.length());
  for (size_t i = 0; i < hc.size(); ++i) {
    hc[i] = Z2{static_cast<uint8_t>((diff.coeff(i).v >> 1) & 1)};
  }
  BinPoly high = BinPoly::from_coeffs(std::move(hc));
  if (!tor.a.is_zero()) high = divmod(high, tor.a).second;
  return {low, high};
}

}  // namespace

void validate(const CanonicalGenerators& g) {
  if (g.n < 1) throw ValidationError("length n must be positive");
  (void)ThetaParam::get(g.theta);

  const BinPoly zn1 = zn_minus_1(g.n);
  struct Named {
    const char* name;
    const BinPoly* p;
  };
  const Named all[] = {{"g11", &g.g11}, {"g12", &g.g12}, {"g13", &g.g13},
                       {"g14", &g.g14}, {"g22", &g.g22}, {"g23", &g.g23},
                       {"g24", &g.g24}, {"g33", &g.g33}, {"g34", &g.g34},
                       {"g44", &g.g44}};
  for (const auto& [name, p] : all) {
    require(p->degree_or(-1) < g.n,
            std::string(name) + " has degree >= n");
  }

  // A zero diagonal drops its whole generator.
  require(!g.g11.is_zero() || (g.g12.is_zero() && g.g13.is_zero() && g.g14.is_zero()),
          "g11 = 0 forces g12 = g13 = g14 = 0");
  require(!g.g22.is_zero() || (g.g23.is_zero() && g.g24.is_zero()),
          "g22 = 0 forces g23 = g24 = 0");
  require(!g.g33.is_zero() || g.g34.is_zero(), "g33 = 0 forces g34 = 0");

  // Divisibility chains; the zero polynomial divides only zero.
  require(divides(g.g22, g.g11), "g22 | g11 (with g22 = " + poly_brief(g.g22) +
                                     ", g11 = " + poly_brief(g.g11) + ")");
  require(divides(g.g44, g.g33), "g44 | g33 (with g44 = " + poly_brief(g.g44) +
                                     ", g33 = " + poly_brief(g.g33) + ")");
  for (const auto& [name, p] : {Named{"g11", &g.g11}, Named{"g22", &g.g22},
                                Named{"g33", &g.g33}, Named{"g44", &g.g44}}) {
    if (!p->is_zero()) {
      require(divides(*p, zn1), std::string(name) + " = " + poly_brief(*p) +
                                    " does not divide z^n-1");
    }
  }

  if (!g.g12.is_zero()) {
    const BinPoly h = divmod(zn1, g.g11).first;
    require(divides(g.g22, mul(g.g12, h)), "g22 | g12 (z^n-1)/g11");
    require(*g.g12.degree() < *g.g22.degree(), "deg g12 < deg g22");
  }
  if (!g.g34.is_zero()) {
    const BinPoly h = divmod(zn1, g.g33).first;
    require(divides(g.g44, mul(g.g34, h)), "g44 | g34 (z^n-1)/g33");
    require(*g.g34.degree() < *g.g44.degree(), "deg g34 < deg g44");
  }

  // Off-diagonal degree bounds; vacuous when the column diagonal is zero.
  const auto col_bound = [&](const char* name, const BinPoly& p,
                             const BinPoly& diag, const char* diag_name) {
    if (p.is_zero() || diag.is_zero()) return;
    require(*p.degree() < *diag.degree(), std::string("deg ") + name +
                                              " < deg " + diag_name);
  };
  col_bound("g13", g.g13, g.g33, "g33");
  col_bound("g23", g.g23, g.g33, "g33");
  col_bound("g14", g.g14, g.g44, "g44");
  col_bound("g24", g.g24, g.g44, "g44");
}

CanonicalGenerators CanonicalGenerators::make(int n, RTheta theta, BinPoly g11,
                                              BinPoly g12, BinPoly g13,
                                              BinPoly g14, BinPoly g22,
                                              BinPoly g23, BinPoly g24,
                                              BinPoly g33, BinPoly g34,
                                              BinPoly g44) {
  CanonicalGenerators g;
  g.n = n;
  g.theta = theta;
  g.g11 = std::move(g11);
  g.g12 = std::move(g12);
  g.g13 = std::move(g13);
  g.g14 = std::move(g14);
  g.g22 = std::move(g22);
  g.g23 = std::move(g23);
  g.g24 = std::move(g24);
  g.g33 = std::move(g33);
  g.g34 = std::move(g34);
  g.g44 = std::move(g44);
  validate(g);
  return g;
}

HowellForm z4_code_module(const std::vector<Z4Poly>& gens, int n) {
  std::vector<Z4Vec> rows;
  for (const auto& p : gens) append_shift_orbit(rows, p, n);
  return HowellForm::howellize(std::move(rows), static_cast<size_t>(n));
}

Z4Triple extract_z4_triple(const HowellForm& d, int n) {
  Z4Triple t;
  t.g = residue_generator(d, n);
  if (t.g == zn_minus_1(n)) t.g = BinPoly{};  // trivial residue
  t.a = doubling_torsion_generator(d, n);
  if (t.a == zn_minus_1(n)) t.a = BinPoly{};
  if (t.g.is_zero()) {
    t.p = BinPoly{};
  } else {
    const auto w = solve_mod2_combination(d, t.g, n);
    if (!w) {
      throw ExtractionError("residue generator has no lift into the module");
    }
    std::vector<Z2> qc(w->size());
    for (size_t i = 0; i < qc.size(); ++i) {
      const uint8_t diff = static_cast<uint8_t>(((*w)[i] - t.g.coeff(i).v) & 3);
      if (diff & 1) throw ExtractionError("lift of residue generator is not congruent mod 2");
      qc[i] = Z2{static_cast<uint8_t>(diff >> 1)};
    }
    BinPoly q = BinPoly::from_coeffs(std::move(qc));
    if (t.a.is_zero()) {
      if (!q.is_zero()) {
        throw ExtractionError("offset polynomial survives with trivial torsion");
      }
      t.p = BinPoly{};
    } else {
      t.p = divmod(q, t.a).second;
    }
  }

  // The extracted triple must satisfy the canonical-form constraints and
  // regenerate the module.
  if (!t.g.is_zero()) {
    if (!divides(t.a, t.g)) {
      throw ExtractionError("extracted a does not divide g");
    }
    if (!t.p.is_zero()) {
      const BinPoly h = divmod(zn_minus_1(n), t.g).first;
      if (!divides(t.a, mul(t.p, h))) {
        throw ExtractionError(
            "no canonical presentation: a does not divide p (z^n-1)/g");
      }
      if (!(*t.p.degree() < *t.a.degree())) {
        throw ExtractionError("extracted offset not reduced below deg a");
      }
    }
  }
  std::vector<Z4Poly> gens;
  if (!t.g.is_zero() || !t.p.is_zero()) gens.push_back(t.main());
  if (!t.a.is_zero()) gens.push_back(t.two_part());
  if (!(z4_code_module(gens, n) == d)) {
    throw ExtractionError("extracted pair does not regenerate the module");
  }
  return t;
}

namespace {

// (a-part | b-part) and (phi-part | k-part) embeddings of a length-n block.
Z4Vec embed_nu_basis(const RPoly& s, int n) {
  Z4Vec v(2 * static_cast<size_t>(n), 0);
  for (size_t i = 0; i < s.length(); ++i) {
    v[i] = s.coeff(i).a;
    v[static_cast<size_t>(n) + i] = s.coeff(i).b;
  }
  return v;
}

Z4Vec embed_k_basis(const RPoly& s, int n, const RTheta& k) {
  Z4Vec v(2 * static_cast<size_t>(n), 0);
  for (size_t i = 0; i < s.length(); ++i) {
    const RTheta c = s.coeff(i);
    v[i] = static_cast<uint8_t>((c.a - k.a * c.b) & 3);
    v[static_cast<size_t>(n) + i] = c.b;
  }
  return v;
}

std::vector<Z4Vec> generator_rows(const std::vector<RPoly>& gens,
                                  const ThetaParam& tp, int n, bool k_basis) {
  const RTheta nu{0, 1};
  std::vector<Z4Vec> rows;
  for (const RPoly& g : gens) {
    if (g.is_zero()) continue;
    const RPoly gn = scale(g, nu, tp);
    for (const RPoly* s : {&g, &gn}) {
      Z4Vec v = k_basis ? embed_k_basis(*s, n, tp.k()) : embed_nu_basis(*s, n);
      for (int i = 0; i < n; ++i) {
        rows.push_back(v);
        // Cyclic shift within each block.
        Z4Vec w(v.size());
        const size_t un = static_cast<size_t>(n);
        for (size_t j = 0; j < un; ++j) {
          w[(j + 1) % un] = v[j];
          w[un + (j + 1) % un] = v[un + j];
        }
        v = std::move(w);
      }
    }
  }
  return rows;
}

HowellForm torsion_from_k_module(const HowellForm& kmod, int n) {
  const size_t un = static_cast<size_t>(n);
  std::vector<Z4Vec> rows;
  for (const auto& row : kmod.rows()) {
    if (row.pivot < un) continue;
    rows.emplace_back(row.v.begin() + static_cast<long>(un), row.v.end());
  }
  return HowellForm::howellize(std::move(rows), un);
}

HowellForm phi_from_k_module(const HowellForm& kmod, int n) {
  const size_t un = static_cast<size_t>(n);
  std::vector<Z4Vec> rows;
  for (const auto& row : kmod.rows()) {
    rows.emplace_back(row.v.begin(), row.v.begin() + static_cast<long>(un));
  }
  return HowellForm::howellize(std::move(rows), un);
}

// Element of the module whose phi-part equals target, found by echelon
// reduction over the pivot < n rows of the k-basis form.
std::optional<Z4Vec> phi_preimage(const HowellForm& kmod, const Z4Vec& target,
                                  int n) {
  const size_t un = static_cast<size_t>(n);
  Z4Vec w(2 * un, 0);
  for (const auto& row : kmod.rows()) {
    if (row.pivot >= un) break;
    const uint8_t want = target[row.pivot];
    const uint8_t have = w[row.pivot];
    const uint8_t d = static_cast<uint8_t>((want - have) & 3);
    if (d == 0) continue;
    uint8_t c;
    if (row.pivot_val == 1) {
      c = d;
    } else {
      if (d & 1) return std::nullopt;
      c = static_cast<uint8_t>(d >> 1);
    }
    for (size_t j = row.pivot; j < 2 * un; ++j) {
      w[j] = static_cast<uint8_t>((w[j] + c * row.v[j]) & 3);
    }
  }
  for (size_t j = 0; j < un; ++j) {
    if (w[j] != target[j]) return std::nullopt;
  }
  return w;
}

}  // namespace

CyclicCode CyclicCode::build(const CanonicalGenerators& gens) {
  validate(gens);
  CyclicCode c;
  c.gens_ = gens;
  c.tp_ = &ThetaParam::get(gens.theta);
  const RTheta k = c.tp_->k();
  const int n = gens.n;

  c.gen_polys_[0] =
      combine_r_plus_ks(plus_double(gens.g11, gens.g12), gens.gbar1(), k);
  c.gen_polys_[1] =
      combine_r_plus_ks(scale(lift(gens.g22), Z4{2}), gens.gbar2(), k);
  c.gen_polys_[2] =
      combine_r_plus_ks(Z4Poly{}, plus_double(gens.g33, gens.g34), k);
  c.gen_polys_[3] =
      combine_r_plus_ks(Z4Poly{}, scale(lift(gens.g44), Z4{2}), k);

  const std::vector<RPoly> gp(c.gen_polys_.begin(), c.gen_polys_.end());
  c.module_ = HowellForm::howellize(generator_rows(gp, *c.tp_, n, false),
                                    2 * static_cast<size_t>(n));
  c.kmod_ = HowellForm::howellize(generator_rows(gp, *c.tp_, n, true),
                                  2 * static_cast<size_t>(n));

  std::vector<Z4Poly> phi_gens;
  if (!gens.g11.is_zero() || !gens.g12.is_zero()) {
    phi_gens.push_back(plus_double(gens.g11, gens.g12));
  }
  if (!gens.g22.is_zero()) phi_gens.push_back(scale(lift(gens.g22), Z4{2}));
  c.phi_mod_ = z4_code_module(phi_gens, n);

  std::vector<Z4Poly> tor_gens;
  if (!gens.g33.is_zero() || !gens.g34.is_zero()) {
    tor_gens.push_back(plus_double(gens.g33, gens.g34));
  }
  if (!gens.g44.is_zero()) tor_gens.push_back(scale(lift(gens.g44), Z4{2}));
  c.tor_mod_ = z4_code_module(tor_gens, n);

  // Lemma-4 position checks: the stated residue and torsion pairs must be
  // what the module actually has, and both pairs must sit in canonical
  // position themselves.
  if (!(phi_from_k_module(c.kmod_, n) == c.phi_mod_)) {
    throw ValidationError(
        "presentation inconsistent: phi(C) differs from <g11+2g12, 2g22>");
  }
  if (!(torsion_from_k_module(c.kmod_, n) == c.tor_mod_)) {
    throw ValidationError(
        "presentation inconsistent: Tor(C) differs from <g33+2g34, 2g44>");
  }
  const auto normalized = [&](BinPoly t) {
    return t == zn_minus_1(n) ? BinPoly{} : t;
  };
  if (!(normalized(doubling_torsion_generator(c.phi_mod_, n)) == gens.g22)) {
    throw ValidationError(
        "presentation inconsistent: doubling torsion of phi(C) is not <g22>");
  }
  if (!(normalized(doubling_torsion_generator(c.tor_mod_, n)) == gens.g44)) {
    throw ValidationError(
        "presentation inconsistent: doubling torsion of Tor(C) is not <g44>");
  }
  return c;
}

Z4Vec CyclicCode::embed(const RPoly& s) const {
  if (s.degree_or(-1) >= gens_.n) {
    throw ValidationError("polynomial degree exceeds code length");
  }
  return embed_nu_basis(s, gens_.n);
}

RPoly CyclicCode::unembed(const Z4Vec& v) const {
  const size_t un = static_cast<size_t>(gens_.n);
  std::vector<RTheta> c(un);
  for (size_t i = 0; i < un; ++i) c[i] = RTheta{v[i], v[un + i]};
  return RPoly::from_coeffs(std::move(c));
}

bool CyclicCode::member(const RPoly& s) const {
  return module_.contains(embed(s));
}

std::optional<std::vector<uint8_t>> CyclicCode::member_certificate(
    const RPoly& s) const {
  return module_.express(embed(s));
}

CanonicalGenerators canonicalize(const std::vector<RPoly>& raw, int n,
                                 RTheta theta) {
  const ThetaParam& tp = ThetaParam::get(theta);
  if (n < 1) throw ValidationError("length n must be positive");

  std::vector<RPoly> reduced;
  for (const auto& s : raw) reduced.push_back(reduce_mod_zn1(s, n));

  const HowellForm module = HowellForm::howellize(
      generator_rows(reduced, tp, n, false), 2 * static_cast<size_t>(n));
  const HowellForm kmod = HowellForm::howellize(
      generator_rows(reduced, tp, n, true), 2 * static_cast<size_t>(n));

  const HowellForm d_phi = phi_from_k_module(kmod, n);
  const HowellForm d_tor = torsion_from_k_module(kmod, n);

  const Z4Triple phi = extract_z4_triple(d_phi, n);
  const Z4Triple tor = extract_z4_triple(d_tor, n);

  BinPoly g13, g14, g23, g24;
  const size_t un = static_cast<size_t>(n);
  if (!phi.g.is_zero()) {
    const auto w = phi_preimage(kmod, embed_len_n(phi.main(), n), n);
    if (!w) throw ExtractionError("no module element lifts g11 + 2 g12");
    const Z4Poly s0 = z4_from_range(*w, un, un);
    std::tie(g13, g14) = reduce_offsets(s0, tor);
  }
  if (!phi.a.is_zero()) {
    const auto w =
        phi_preimage(kmod, embed_len_n(scale(lift(phi.a), Z4{2}), n), n);
    if (!w) throw ExtractionError("no module element lifts 2 g22");
    const Z4Poly s0 = z4_from_range(*w, un, un);
    std::tie(g23, g24) = reduce_offsets(s0, tor);
  }

  CanonicalGenerators out;
  try {
    out = CanonicalGenerators::make(n, theta, phi.g, phi.p, g13, g14, phi.a,
                                    g23, g24, tor.g, tor.p, tor.a);
  } catch (const ValidationError& e) {
    throw ExtractionError(std::string("extracted tuple is not canonical: ") +
                          e.what());
  }

  CyclicCode rebuilt = [&] {
    try {
      return CyclicCode::build(out);
    } catch (const ValidationError& e) {
      throw ExtractionError(std::string("extracted tuple fails to build: ") +
                            e.what());
    }
  }();
  if (!(rebuilt.module() == module)) {
    throw ExtractionError("extracted tuple regenerates a different module");
  }
  return out;
}

}  // namespace rtheta

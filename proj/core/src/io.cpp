#include "rtheta/io.hpp"

#include <cctype>
#include <map>

#include "json.hpp"
#include "rtheta/complement.hpp"
#include "rtheta/reversibility.hpp"

namespace rtheta {

namespace {

using nlohmann::json;

std::string coeff_text(Z2 c) { return std::to_string(int(c.v)); }
std::string coeff_text(Z4 c) { return std::to_string(int(c.v)); }
std::string coeff_text(const RTheta& c) { return to_text(c); }

bool coeff_is_one(Z2 c) { return c.v == 1; }
bool coeff_is_one(Z4 c) { return c.v == 1; }
bool coeff_is_one(const RTheta& c) { return c == RTheta{1, 0}; }

template <class E>
std::string poly_text(const Poly<E>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = static_cast<int>(p.length()) - 1; i >= 0; --i) {
    const E c = p.coeff(static_cast<size_t>(i));
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = coeff_text(c);
    if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
    } else {
      const std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
      out += coeff_is_one(c) ? zp : cs + "*" + zp;
    }
  }
  return out;
}

// Tiny tokenizer shared by the element and polynomial parsers.
struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw ParseError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(pos) + " in \"" + std::string(s) + "\"");
    }
  }
  int integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw ParseError("expected integer at position " + std::to_string(pos) +
                       " in \"" + std::string(s) + "\"");
    }
    int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) throw ParseError("integer literal too large");
      ++pos;
    }
    return v;
  }
};

// element := part (('+'|'-') part)* with part := int ['*' 'v'] | int? 'v'
RTheta element_body(Lexer& lx) {
  RTheta acc{0, 0};
  bool first = true;
  for (;;) {
    int sign = 1;
    if (!first || lx.peek() == '+' || lx.peek() == '-') {
      if (lx.accept('+')) {
        sign = 1;
      } else if (lx.accept('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
    }
    first = false;
    int mag;
    bool has_v = false;
    if (lx.peek() == 'v') {
      lx.expect('v');
      mag = 1;
      has_v = true;
    } else {
      mag = lx.integer();
      if (lx.accept('*')) {
        lx.expect('v');
        has_v = true;
      } else if (lx.peek() == 'v') {
        lx.expect('v');
        has_v = true;
      }
    }
    const uint8_t val = static_cast<uint8_t>(((sign * mag) % 4 + 4) % 4);
    if (has_v) {
      acc.b = static_cast<uint8_t>((acc.b + val) & 3);
    } else {
      acc.a = static_cast<uint8_t>((acc.a + val) & 3);
    }
    if (lx.peek() != '+' && lx.peek() != '-') break;
  }
  return acc;
}

// Product of two elements without a ring parameter; only defined when no
// v*v term arises, which covers everything the polynomial syntax produces.
RTheta mul_no_theta(const RTheta& x, const RTheta& y, const Lexer& lx) {
  if (x.b != 0 && y.b != 0) {
    throw ParseError("product v*v needs a ring parameter and is not valid "
                     "coefficient syntax in \"" + std::string(lx.s) + "\"");
  }
  return RTheta{static_cast<uint8_t>((x.a * y.a) & 3),
                static_cast<uint8_t>((x.a * y.b + x.b * y.a) & 3)};
}

// One term: '*'-separated factors, each an integer, `v`, `z[^k]` or a
// parenthesised element. Returns (coefficient, exponent).
std::pair<RTheta, int> poly_term(Lexer& lx) {
  RTheta coeff{1, 0};
  int expo = 0;
  bool saw_factor = false;
  for (;;) {
    const char c = lx.peek();
    if (c == '(') {
      lx.expect('(');
      const RTheta e = element_body(lx);
      lx.expect(')');
      coeff = mul_no_theta(coeff, e, lx);
    } else if (c == 'z') {
      lx.expect('z');
      int e = 1;
      if (lx.accept('^')) e = lx.integer();
      expo += e;
    } else if (c == 'v') {
      lx.expect('v');
      coeff = mul_no_theta(coeff, RTheta{0, 1}, lx);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const int m = lx.integer();
      coeff = mul_no_theta(coeff, RTheta{static_cast<uint8_t>(m % 4), 0}, lx);
    } else {
      break;
    }
    saw_factor = true;
    if (!lx.accept('*')) break;
  }
  if (!saw_factor) {
    throw ParseError("empty term at position " + std::to_string(lx.pos) +
                     " in \"" + std::string(lx.s) + "\"");
  }
  return {coeff, expo};
}

RPoly parse_rpoly_impl(std::string_view s) {
  Lexer lx{s};
  if (lx.eof()) throw ParseError("empty polynomial");
  std::map<int, RTheta> terms;
  int sign = 1;
  if (lx.accept('-')) sign = -1;
  for (;;) {
    auto [coeff, expo] = poly_term(lx);
    if (sign < 0) coeff = neg(coeff);
    auto& slot = terms[expo];
    slot = add(slot, coeff);
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else {
      break;
    }
  }
  if (!lx.eof()) {
    throw ParseError("trailing input at position " + std::to_string(lx.pos) +
                     " in \"" + std::string(s) + "\"");
  }
  std::vector<RTheta> c(terms.empty() ? 0 : static_cast<size_t>(terms.rbegin()->first) + 1);
  for (const auto& [e, v] : terms) c[static_cast<size_t>(e)] = v;
  return RPoly::from_coeffs(std::move(c));
}

json poly_to_json_arr(const BinPoly& p) {
  json a = json::array();
  for (size_t i = 0; i < p.length(); ++i) a.push_back(int(p.coeff(i).v));
  return a;
}

BinPoly bin_poly_from_json(const json& a, const std::string& where) {
  if (!a.is_array()) throw ParseError(where + ": expected array of 0/1");
  std::vector<Z2> c;
  for (const auto& x : a) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1)) {
      throw ParseError(where + ": coefficients must be 0 or 1");
    }
    c.push_back(Z2{static_cast<uint8_t>(x.get<int>())});
  }
  return BinPoly::from_coeffs(std::move(c));
}

RTheta element_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_element(j.get<std::string>());
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw ParseError(where + ": expected [a, b] with a, b in 0..3");
  }
  const int a = j[0].get<int>(), b = j[1].get<int>();
  if (a < 0 || a > 3 || b < 0 || b > 3) {
    throw ParseError(where + ": components must lie in 0..3");
  }
  return RTheta{static_cast<uint8_t>(a), static_cast<uint8_t>(b)};
}

json condition_to_json(const ConditionResult& c) {
  return json{{"holds", c.holds}, {"witness", c.witness}};
}

ConditionResult condition_from_json(const json& j) {
  ConditionResult c;
  c.holds = j.at("holds").get<bool>();
  c.witness = j.at("witness").get<std::string>();
  return c;
}

json report_to_json_obj(const ReversibilityReport& r) {
  return json{{"verdict", r.verdict},
              {"conditions",
               {{"i", condition_to_json(r.cond_i)},
                {"ii", condition_to_json(r.cond_ii)},
                {"iii", condition_to_json(r.cond_iii)},
                {"iv", condition_to_json(r.cond_iv)}}},
              {"exponents",
               {{"alpha", r.alpha},
                {"beta", r.beta},
                {"gamma", r.gamma},
                {"delta", r.delta}}}};
}

ReversibilityReport report_from_json_obj(const json& j) {
  ReversibilityReport r;
  r.verdict = j.at("verdict").get<bool>();
  const json& c = j.at("conditions");
  r.cond_i = condition_from_json(c.at("i"));
  r.cond_ii = condition_from_json(c.at("ii"));
  r.cond_iii = condition_from_json(c.at("iii"));
  r.cond_iv = condition_from_json(c.at("iv"));
  const json& e = j.at("exponents");
  r.alpha = e.at("alpha").get<int>();
  r.beta = e.at("beta").get<int>();
  r.gamma = e.at("gamma").get<int>();
  r.delta = e.at("delta").get<int>();
  return r;
}

}  // namespace

std::string to_text(const RTheta& x) {
  if (x.a == 0 && x.b == 0) return "0";
  std::string s;
  if (x.a != 0) s = std::to_string(int(x.a));
  if (x.b != 0) {
    if (!s.empty()) s += "+";
    if (x.b != 1) s += std::to_string(int(x.b)) + "*";
    s += "v";
  }
  return s;
}

std::string to_text(Z4 x) { return std::to_string(int(x.v)); }
std::string to_text(Z2 x) { return std::to_string(int(x.v)); }
std::string to_text(const BinPoly& p) { return poly_text(p); }
std::string to_text(const Z4Poly& p) { return poly_text(p); }
std::string to_text(const RPoly& p) { return poly_text(p); }

RTheta parse_element(std::string_view s) {
  Lexer lx{s};
  if (lx.eof()) throw ParseError("empty element");
  const RTheta x = element_body(lx);
  if (!lx.eof()) {
    throw ParseError("trailing input in element \"" + std::string(s) + "\"");
  }
  return x;
}

RPoly parse_rpoly(std::string_view s) { return parse_rpoly_impl(s); }

Z4Poly parse_z4_poly(std::string_view s) {
  const RPoly p = parse_rpoly_impl(s);
  std::vector<Z4> c(p.length());
  for (size_t i = 0; i < c.size(); ++i) {
    if (p.coeff(i).b != 0) {
      throw ParseError("v-coefficient in a Z4 polynomial: \"" + std::string(s) + "\"");
    }
    c[i] = Z4{p.coeff(i).a};
  }
  return Z4Poly::from_coeffs(std::move(c));
}

BinPoly parse_bin_poly(std::string_view s) {
  const Z4Poly p = parse_z4_poly(s);
  std::vector<Z2> c(p.length());
  for (size_t i = 0; i < c.size(); ++i) {
    if (p.coeff(i).v > 1) {
      throw ParseError("non-binary coefficient in \"" + std::string(s) + "\"");
    }
    c[i] = Z2{p.coeff(i).v};
  }
  return BinPoly::from_coeffs(std::move(c));
}

CanonicalGenerators code_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("code description must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("missing integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (!j.contains("theta")) throw ParseError("missing field \"theta\"");
  const RTheta theta = element_from_json(j["theta"], "theta");

  std::map<std::string, BinPoly> g;
  if (j.contains("g")) {
    if (!j["g"].is_object()) throw ParseError("field \"g\" must be an object");
    for (const auto& [key, val] : j["g"].items()) {
      static const char* known[] = {"11", "12", "13", "14", "22",
                                    "23", "24", "33", "34", "44"};
      bool ok = false;
      for (const char* k : known) ok = ok || key == k;
      if (!ok) throw ParseError("unknown generator key \"" + key + "\"");
      g[key] = bin_poly_from_json(val, "g." + key);
    }
  }
  const auto get = [&](const char* key) {
    const auto it = g.find(key);
    return it == g.end() ? BinPoly{} : it->second;
  };
  return CanonicalGenerators::make(n, theta, get("11"), get("12"), get("13"),
                                   get("14"), get("22"), get("23"), get("24"),
                                   get("33"), get("34"), get("44"));
}

std::string code_to_json(const CanonicalGenerators& g, int indent) {
  json jg = json::object();
  const std::pair<const char*, const BinPoly*> entries[] = {
      {"11", &g.g11}, {"12", &g.g12}, {"13", &g.g13}, {"14", &g.g14},
      {"22", &g.g22}, {"23", &g.g23}, {"24", &g.g24}, {"33", &g.g33},
      {"34", &g.g34}, {"44", &g.g44}};
  for (const auto& [key, p] : entries) {
    if (!p->is_zero()) jg[key] = poly_to_json_arr(*p);
  }
  const json j{{"n", g.n}, {"theta", {int(g.theta.a), int(g.theta.b)}}, {"g", jg}};
  return j.dump(indent);
}

std::string report_to_json(const ReversibilityReport& r, int indent) {
  return report_to_json_obj(r).dump(indent);
}

ReversibilityReport report_from_json(const std::string& text) {
  try {
    return report_from_json_obj(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string revcomp_report_to_json(const RevCompReport& r, int indent) {
  json j = json{{"pair",
                 {{"u", {int(r.pair.u.a), int(r.pair.u.b)}},
                  {"t", {int(r.pair.t.a), int(r.pair.t.b)}}}},
                {"reversible", r.reversible},
                {"zero_word_in_code", r.zero_word_in_code},
                {"verdict", r.verdict},
                {"reversibility", report_to_json_obj(r.reversibility)}};
  return j.dump(indent);
}

RevCompReport revcomp_report_from_json(const std::string& text,
                                       const ThetaParam& tp) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
  const RTheta u = element_from_json(j.at("pair").at("u"), "pair.u");
  const RTheta t = element_from_json(j.at("pair").at("t"), "pair.t");
  RevCompReport r{ComplementPair::make(u, t, tp)};
  r.reversible = j.at("reversible").get<bool>();
  r.zero_word_in_code = j.at("zero_word_in_code").get<bool>();
  r.verdict = j.at("verdict").get<bool>();
  r.reversibility = report_from_json_obj(j.at("reversibility"));
  return r;
}

std::string howell_to_json(const HowellForm& h, int indent) {
  json rows = json::array();
  for (const auto& r : h.rows()) {
    json v = json::array();
    for (uint8_t x : r.v) v.push_back(int(x));
    rows.push_back(json{{"row", v},
                        {"pivot", r.pivot},
                        {"pivot_value", int(r.pivot_val)}});
  }
  return json{{"width", h.width()}, {"rows", rows}}.dump(indent);
}

}  // namespace rtheta

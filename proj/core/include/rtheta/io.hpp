#pragma once

#include <string>
#include <string_view>

#include "rtheta/code.hpp"
#include "rtheta/howell.hpp"
#include "rtheta/poly.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

struct ReversibilityReport;
struct RevCompReport;

// --- element and polynomial text ---
//
// Elements print as `a+b*v` with zero parts omitted (`0`, `2`, `v`, `3*v`,
// `2+3*v`). Polynomials print highest power first, `*` between coefficient
// and power, unit coefficients omitted:`z^3 + 3*z + 2`,
// `(1+2*v)*z^2 + v`. Parsers accept optional whitespace, `-`, explicit unit
// coefficients and any term order.

std::string to_text(const RTheta& x);
std::string to_text(Z4 x);
std::string to_text(Z2 x);
std::string to_text(const BinPoly& p);
std::string to_text(const Z4Poly& p);
std::string to_text(const RPoly& p);

RTheta parse_element(std::string_view s);
RPoly parse_rpoly(std::string_view s);
Z4Poly parse_z4_poly(std::string_view s);
BinPoly parse_bin_poly(std::string_view s);

// --- JSON ---
//
// Code description:
//   {"n": 4, "theta": [0, 2],
//    "g": {"11": [1,1,1,1], "22": [1,0,1], "33": [1,0,1], "44": [1,1],
//          "24": [1]}}
// Binary polynomials are arrays of 0/1, constant term first; omitted keys
// are the zero polynomial. Elements are [a, b].

CanonicalGenerators code_from_json(const std::string& text);
std::string code_to_json(const CanonicalGenerators& g, int indent = 2);

std::string report_to_json(const ReversibilityReport& r, int indent = 2);
ReversibilityReport report_from_json(const std::string& text);

std::string revcomp_report_to_json(const RevCompReport& r, int indent = 2);
RevCompReport revcomp_report_from_json(const std::string& text,
                                       const ThetaParam& tp);

// Debug dump of a Howell form as a JSON matrix with pivot metadata.
std::string howell_to_json(const HowellForm& h, int indent = 2);

}  // namespace rtheta

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fflab/calculus.hpp"
#include "fflab/laurent.hpp"

namespace fflab {

// Canonical element syntax, e.g. "T^2+2*T+1", "T^{3/2}+T^{-1}", "2*T^-3", "0".
// Coefficients are field-element indices in [0, q); for extension fields the
// base-p digits of the index are the coordinates in the power basis of the
// documented modulus.  The ramification index of the parsed element is the
// lcm of the exponent denominators.  print_elem(parse_elem(s)) == canon(s) and
// parse_elem(print_elem(a)) == a exactly.
LaurentElem parse_elem(const FqCtx& F, std::string_view s);
std::string print_elem(const LaurentElem& a);

// Comma-separated element lists ("T, T^-1+1, 0").
std::vector<LaurentElem> parse_elem_list(const FqCtx& F, std::string_view s);
std::string print_elem_list(const std::vector<LaurentElem>& v);

// Multivariate polynomial syntax over element coefficients, e.g.
// "x1^2 + T^-1*x1 + (T+1)*x2".  Compound coefficients must be parenthesized.
MPoly parse_mpoly(const FqCtx& F, int nvars, std::string_view s);
std::string print_mpoly(const MPoly& p);

}  // namespace fflab

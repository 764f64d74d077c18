#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weitz/cpoly.hpp"
#include "weitz/ncpoly.hpp"

namespace weitz {

// Canonical variable names: x / x,y / x,y,z for arity <= 3, else x1..xm.
std::vector<std::string> default_names(int arity);

// Text form: terms in ascending deg-lex order, each "coef*name*name*...";
// unit coefficients are dropped, the empty word prints as a bare coefficient,
// terms are joined with " + " / " - ".  Output is re-parseable.
std::string render(const NCPoly& p, const std::vector<std::string>& names);
std::string render(const CPoly& p, const std::vector<std::string>& names);

// Parser accepts the rendered form plus the conveniences ^k, parentheses and
// xN aliases for the short names, so CLI input like "x*z+y^2" works.
NCPoly parse_nc(const std::string& text, const std::vector<std::string>& names);
CPoly parse_c(const std::string& text, const std::vector<std::string>& names);

// Renders an ordered list of (monomial text, coefficient) pairs in the same
// style as the polynomial renderers; an empty monomial text prints as a bare
// coefficient.  Used for quotient-context elements whose basis keys are not
// plain words.
std::string render_combination(const std::vector<std::pair<std::string, Rat>>& terms);

// JSON forms.  Noncommutative terms carry "word" (letter indices), commutative
// terms carry "mono" (exponents); coefficients are decimal strings "p/q".
nlohmann::ordered_json to_json(const NCPoly& p, const std::vector<std::string>& names);
nlohmann::ordered_json to_json(const CPoly& p, const std::vector<std::string>& names);
NCPoly nc_from_json(const nlohmann::json& j);
CPoly c_from_json(const nlohmann::json& j);

}  // namespace weitz

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lmc/endo.hpp"
#include "lmc/lie_element.hpp"
#include "lmc/trunc_poly.hpp"

namespace lmc {

using Json = nlohmann::ordered_json;

// Polynomials: "1/2*t1^2*t3 - t2". Variables are 1-based in text.
TruncPoly parse_poly(std::string_view text, int num_vars, int cap);
std::string print_poly(const TruncPoly& p);

// Elements: element := term (('+'|'-') term)*; term := [rational '*'] atom;
// atom := 'x' INT | '[' element (',' element)+ ']'. A leading sign is accepted,
// and so is the literal 0.
LieElement parse_element(const Context& ctx, std::string_view text);

enum class ElementStyle { basis, wreath };
std::string print_element(const LieElement& u, ElementStyle style = ElementStyle::basis);
// "x3" or "[x2,x1,x1]" for a 0-based tuple.
std::string print_tuple(const BasisTuple& t);

// {"m":M,"c":C,"images":[...]} or {"m":M,"c":C,"jacobian":[[...]]}.
Endomorphism parse_automorphism(std::string_view json_text);
Endomorphism automorphism_from_json(const Json& j);
// Images in basis style and, for IA maps, the Jacobian.
Json automorphism_to_json(const Endomorphism& phi);
Json jacobian_to_json(const JacobianMatrix& j);
JacobianMatrix jacobian_from_json(const Context& ctx, const Json& rows);

}  // namespace lmc

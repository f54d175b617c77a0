#pragma once

// Text literals for elements, extended points and plane points.
//
//   rational   := '-'? digits ('/' digits)?
//   gfp        := '-'? digits                      (reduced mod p)
//   quaternion := term (('+'|'-') term)*
//   term       := rational unit? | unit,   unit := 'i' | 'j' | 'k'
//   extended   := element | "inf"
//   point      := element ',' element
//
// Whitespace is ignored. format() always emits the canonical spelling, e.g.
// "1/2+1/2i-1/2j-1/2k", "-k", "3/4", and parse(format(x)) == x.

#include <string>
#include <string_view>

#include "crossratio/plane.hpp"
#include "crossratio/ratio.hpp"
#include "crossratio/skewfield.hpp"

namespace crossratio {

std::string format(const Rational& q);
std::string format(const FieldElement& x);
std::string format(const ExtendedPoint& x);
std::string format(const PlanePoint& p);
std::string format(const PlaneLine& l);

FieldElement parse_element(const Field& field, std::string_view text);
ExtendedPoint parse_extended(const Field& field, std::string_view text);
PlanePoint parse_point(const Field& field, std::string_view text);

} // namespace crossratio

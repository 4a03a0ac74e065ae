#pragma once

#include <string>

#include "polycert/polynomial.hpp"

namespace polycert {

// Grammar (whitespace insignificant):
//   poly := ['-'] term (('+'|'-') term)*
//   term := rat ['*' factors] | factors
//   factors := var ['^' int] ('*' var ['^' int])*
//   rat  := int ['/' int]
// Throws ParseError with a byte position for syntax errors and unknown
// variables.
RatPoly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace polycert

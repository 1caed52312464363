#pragma once

#include <string>
#include <string_view>

#include "quadcomp/polynomial.hpp"

namespace quadcomp {

/// Parses the text form used on the command line:
///
///   poly  := term (('+'|'-') term)*
///   term  := coeff? ('*'? 'x' ('^' uint)?)?      at least one of coeff, x
///   coeff := int | int '/' uint
///
/// A sign may precede the first term. Whitespace is ignored and like terms are
/// collected. Throws ParseError (with position) or DomainError (zero denominator).
SparsePoly parse_poly(std::string_view text);

/// Canonical rendering, highest exponent first: "x^6 + 2*x^4 - 1/2*x + 3".
/// The zero polynomial renders as "0".
std::string format_poly(const SparsePoly& p);

}  // namespace quadcomp

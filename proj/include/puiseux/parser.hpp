#ifndef PUISEUX_PARSER_HPP
#define PUISEUX_PARSER_HPP

#include <string_view>

#include "puiseux/field.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/puiseux_poly.hpp"

namespace puiseux {

// Text forms accepted by the CLI.
//
//   monoid:  "fg: g1, g2, ..." | "pr: a1/p1, ... [; tail]" | "qplus"
//            | "ppr: p" | "biprime: p, q" | "powers: p, q"
//   poly:    terms joined by '+' or '-', term := [coeff "*"] "X" ["^" exp] | coeff,
//            coeff := n | n/d, exp := n | "(" n "/" d ")"
//
// Syntax errors throw ParseError (with a byte offset); well-formed text with
// bad parameters throws ValidationError.

MonoidSpec parse_monoid(std::string_view text);

/// Coefficients are reduced into `field`. A negative exponent is a ParseError.
PuiseuxPoly parse_poly(std::string_view text, const Field& field);

} // namespace puiseux

#endif

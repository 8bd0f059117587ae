#pragma once

#include <string_view>

#include "morin/alphabet.hpp"
#include "morin/poly.hpp"
#include "morin/schur.hpp"

namespace morin {

/// Difference-argument grammar:
///
///   arg   := side? ('-' item)*         first '-' starts the minus side
///   side  := item ('+' item)*
///   item  := INT                       n unit letters ("2" = 1 + 1)
///          | '[' form ']'              one boxed letter
///          | VAR                       one letter
///          | ('B' | 'X' | 'Y') '_' (INT | '{' INT '}')
///                                      b1..bn, x1..xn, y1..yn
///          | 'D'                       [2*x1] + [2*x2] + [x1 + x2]
///   form  := ['-'] mono (('+' | '-') mono)*
///   mono  := INT ['*'] VAR | INT | VAR
///
/// "0" denotes the empty alphabet. Throws ParseError.
DiffArg parse_diffarg(std::string_view text);
Letter parse_letter(std::string_view text);

/// Polynomial grammar: sums of products of rationals, variables and
/// parenthesized subexpressions, with '^' for nonnegative integer powers and
/// implicit multiplication ("2x1x2" = 2*x1*x2). Accepts Poly::to_string output.
Poly parse_poly(std::string_view text);

/// Expansion grammar: terms "c S_{p1p2...}" joined by '+' or '-'; the
/// coefficient may be an integer or a fraction, '*' optional, the partition
/// a digit string, a comma list, or a single unbraced digit string (S_4).
/// Accepts SchurExpansion::to_string output.
SchurExpansion parse_expansion(std::string_view text);

} // namespace morin

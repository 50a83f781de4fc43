#pragma once

#include <string_view>

#include "lee/index_polynomial.hpp"

namespace lee {

/// Parses a polynomial expression in the symbol n.
///
/// Grammar (whitespace and newlines ignored):
///
///     expr   := term (('+' | '-') term)*
///     term   := unary (('*' | '/') unary)*
///     unary  := ('+' | '-') unary | power
///     power  := atom ('**' unary)?
///     atom   := INTEGER | 'n' | '(' expr ')'
///
/// Exponents must reduce to nonnegative integer constants and divisors to
/// nonzero constants, so the result is always a polynomial. Unary minus binds
/// looser than '**', so "-n**2" is -(n**2).
///
/// Throws ParseError naming the offending token on malformed input, and
/// ArithmeticError on division by a zero constant.
IndexPolynomial parse_expression(std::string_view text);

}  // namespace lee

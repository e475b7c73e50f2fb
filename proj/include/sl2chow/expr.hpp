#pragma once

#include <string>

#include "sl2chow/abvar.hpp"

namespace sl2chow {

// Class-expression grammar over a single-factor variety:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*  |  factor ('#' factor)*
//   factor := ('-' | 'F')* power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// '^' is intersection power, '*' intersection, '#' Pontryagin, 'F' Fourier.
// '*'['/'] and '#' may not be mixed in one parenthesis-free chain. '/' is
// division by a nonzero scalar-valued factor. Identifiers: x1..xg, y1..yg,
// theta, pt, one.
CohClass parse_class(const std::string& text, const ProductVariety& variety);

// Canonical printing: a class equal to a polynomial in theta prints as one
// ("-theta", "1 + theta", "3/2*theta^2"); otherwise as a sum of monomials in
// generator order. parse_class round-trips on this output.
std::string print_class(const CohClass& z);

// Monomial form only (used for classes on products, e.g. correspondences).
std::string print_monomials(const CohClass& z);

std::string print_rational(const Rational& r);

}  // namespace sl2chow

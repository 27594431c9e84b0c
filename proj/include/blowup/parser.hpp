#ifndef BLOWUP_PARSER_HPP
#define BLOWUP_PARSER_HPP

#include <string>

#include "blowup/ring.hpp"

namespace blowup {

// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := uint | identifier | '(' expr ')'
// Identifiers must be declared ring variables. No division.
Poly parse_polynomial(const std::string& text, const PresentedRing& ring);

// Canonical printer: graded-reverse-lex descending term order, exponent 1
// left implicit ("x^2*y"), coefficient 1 omitted in front of a monomial.
// Rational coefficients may print as "a/b" in reports; the input grammar
// itself has no division.
std::string print_polynomial(const Poly& f, const PresentedRing& ring);

std::string print_monomial(const Monomial& m, const PresentedRing& ring);

}  // namespace blowup

#endif

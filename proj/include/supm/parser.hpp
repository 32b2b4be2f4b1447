#ifndef SUPM_PARSER_HPP
#define SUPM_PARSER_HPP

#include <stdexcept>
#include <string>

#include "supm/poly.hpp"

namespace supm {

struct ParseError : std::runtime_error {
  ParseError(size_t pos, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
        position(pos),
        what_short(message) {}
  size_t position;
  std::string what_short;
};

struct PolyExpr {
  std::string source;
  Poly parsed;
  char variable = 'z';  // the single free variable (default when none appears)
};

// Grammar: + - * ^ with parentheses, rational literals p/q, the imaginary
// unit i, and implicit multiplication by juxtaposition ("3z^2", "25/6 z^4").
// Precedence: ^ > unary minus > multiplication > + -. '^' is right
// associative and its exponent must be a nonnegative integer constant.
// Exactly one free variable is permitted; pass expected_variable to pin it
// ('\0' accepts whichever letter appears first). 'i' is reserved.
PolyExpr parse_poly_expr(const std::string& src, char expected_variable = '\0');
Poly parse_poly(const std::string& src, char expected_variable = '\0');

// Constant expression (no variable at all), e.g. "-1/60", "1+i", "2/3i".
GaussianRational parse_scalar(const std::string& src);

// Canonical descending-power rendering; parse_poly(render_poly(f)) == f.
std::string render_poly(const Poly& f, char variable = 'z');

}  // namespace supm

#endif

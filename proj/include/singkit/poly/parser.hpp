#pragma once

// Expression grammar accepted by parse_polynomial:
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { "*" unary } ;
//   unary   = ("+" | "-") unary | power ;
//   power   = atom [ "^" integer ] ;
//   atom    = integer [ "/" integer ] | identifier | "(" expr ")" ;
//   integer = digit { digit } ;
//
// Whitespace is ignored between tokens. "a/b" is only a rational literal;
// there is no polynomial division. "^" binds tighter than unary minus.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "singkit/poly/polynomial.hpp"

namespace singkit::poly {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses and expands an expression into canonical sparse form.
/// Throws ParseError on syntax errors and unknown variable names.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace singkit::poly

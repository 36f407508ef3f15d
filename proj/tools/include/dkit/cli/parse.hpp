#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dkit/poly.hpp"

namespace dkit::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Exact polynomial parser.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | 'i' | variable | '(' expr ')'
///
/// No implicit multiplication, no floating literals, no negative powers.
MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& vars);

}  // namespace dkit::cli

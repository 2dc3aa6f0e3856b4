#pragma once

#include <stdexcept>
#include <string>

#include "bosonic/algebra.hpp"

namespace bosonic {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar (whitespace insignificant):
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'|'/'] factor)*      division only by scalar factors
//   factor  := number | ('q'|'v') ['^' int] | 'f[' int ',' int ']' | '(' element ')'
RatFunc parse_scalar(const std::string& text);
LaurentScalar parse_laurent(const std::string& text);
Element parse_element(const std::string& text);
// Also checks node indices against the datum.
Element parse_element(const std::string& text, const CartanDatum& cd);

}  // namespace bosonic

#pragma once

// Text form of exact asymptotic numbers.
//
//   3 + 5*e^1 - 1*e^2 (+O(e^4))
//   1/2 - 3/4*e^(1/2) + 1*e^-1
//
// Grammar accepted by parse_field_expression (whitespace is ignored):
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := ('+' | '-') unary | power
//   power    := primary ('^' exponent)?
//   exponent := ['+' | '-'] integer | '(' ['-'] integer ['/' integer] ')'
//   primary  := number | 'e' | 'O' '(' 'e' ['^' exponent] ')' | '(' expr ')'
//   number   := digits ['.' digits]
//
// 'e' is the infinitesimal generator. O(e^q) is zero known up to order q.
// Non-integer exponents are only allowed on a pure power of e.

#include "hyperlab/asymptotic_number.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

std::string render(const RationalAsymptotic& a);
std::string render_exponent(const Rational& q);

// Throws ParseError on malformed input and FieldError (DivisionByZero) when a
// division by zero occurs while evaluating.
RationalAsymptotic parse_field_expression(
    std::string_view text, const Rational& relative_order = Rational(kDefaultRelativeOrder));

// "error at position N: message" followed by the input and a caret line.
std::string annotate(std::string_view text, const ParseError& error);

}  // namespace hyperlab

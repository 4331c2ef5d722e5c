#pragma once

// Real-valued expressions in the free symbols n and x, used to define series
// terms, partial sums and limits from the command line:
//
//   sin((n+1)*x)/(n+1)      (1-x)^n      arctan(n*x)      sign(x)*pi/2
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?            right associative
//   primary := number | 'n' | 'x' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | tan | arctan | atan | exp | log | sqrt | abs | sign

#include "hyperlab/field_text.hpp"  // ParseError

#include <memory>
#include <string>
#include <string_view>

namespace hyperlab {

class Expression {
 public:
  struct Node;

  static Expression parse(std::string_view text);

  double operator()(double n, double x) const;

  bool uses_n() const { return uses_n_; }
  bool uses_x() const { return uses_x_; }
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  bool uses_n_ = false;
  bool uses_x_ = false;
};

// Parses a constant expression (no n, no x), e.g. "pi/2" or "-1".
double parse_constant(std::string_view text);

}  // namespace hyperlab

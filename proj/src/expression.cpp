#include "hyperlab/expression.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

namespace hyperlab {

struct Expression::Node {
  enum class Op { Const, VarN, VarX, Neg, Add, Sub, Mul, Div, Pow, Call };
  enum class Fn { Sin, Cos, Tan, Atan, Exp, Log, Sqrt, Abs, Sign };

  Op op;
  double value = 0.0;
  Fn fn = Fn::Sin;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;

  double eval(double n, double x) const {
    switch (op) {
      case Op::Const:
        return value;
      case Op::VarN:
        return n;
      case Op::VarX:
        return x;
      case Op::Neg:
        return -lhs->eval(n, x);
      case Op::Add:
        return lhs->eval(n, x) + rhs->eval(n, x);
      case Op::Sub:
        return lhs->eval(n, x) - rhs->eval(n, x);
      case Op::Mul:
        return lhs->eval(n, x) * rhs->eval(n, x);
      case Op::Div:
        return lhs->eval(n, x) / rhs->eval(n, x);
      case Op::Pow:
        return std::pow(lhs->eval(n, x), rhs->eval(n, x));
      case Op::Call:
        return call(lhs->eval(n, x));
    }
    return 0.0;
  }

  double call(double a) const {
    switch (fn) {
      case Fn::Sin:
        return std::sin(a);
      case Fn::Cos:
        return std::cos(a);
      case Fn::Tan:
        return std::tan(a);
      case Fn::Atan:
        return std::atan(a);
      case Fn::Exp:
        return std::exp(a);
      case Fn::Log:
        return std::log(a);
      case Fn::Sqrt:
        return std::sqrt(a);
      case Fn::Abs:
        return std::abs(a);
      case Fn::Sign:
        return static_cast<double>((a > 0) - (a < 0));
    }
    return 0.0;
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto node = std::make_unique<Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto root = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

  bool uses_n = false;
  bool uses_x = false;

 private:
  NodePtr expr() {
    auto node = term();
    for (;;) {
      if (accept('+')) {
        node = make(Node::Op::Add, std::move(node), term());
      } else if (accept('-')) {
        node = make(Node::Op::Sub, std::move(node), term());
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    auto node = unary();
    for (;;) {
      if (accept('*')) {
        node = make(Node::Op::Mul, std::move(node), unary());
      } else if (accept('/')) {
        node = make(Node::Op::Div, std::move(node), unary());
      } else {
        return node;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    auto base = primary();
    if (accept('^')) return make(Node::Op::Pow, std::move(base), unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (ch == '(') {
      ++pos_;
      auto node = expr();
      expect(')');
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "n") {
        uses_n = true;
        return make(Node::Op::VarN);
      }
      if (name == "x") {
        uses_x = true;
        return make(Node::Op::VarX);
      }
      if (name == "pi") {
        auto node = make(Node::Op::Const);
        node->value = std::numbers::pi;
        return node;
      }
      static const std::vector<std::pair<std::string, Node::Fn>> functions = {
          {"sin", Node::Fn::Sin},   {"cos", Node::Fn::Cos},   {"tan", Node::Fn::Tan},
          {"arctan", Node::Fn::Atan}, {"atan", Node::Fn::Atan}, {"exp", Node::Fn::Exp},
          {"log", Node::Fn::Log},   {"sqrt", Node::Fn::Sqrt}, {"abs", Node::Fn::Abs},
          {"sign", Node::Fn::Sign}};
      for (const auto& [fname, fn] : functions) {
        if (fname == name) {
          expect('(');
          auto node = make(Node::Op::Call, expr());
          node->fn = fn;
          expect(')');
          return node;
        }
      }
      throw ParseError(start, "unknown identifier '" + name + "'");
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, ch) + "'");
  }

  NodePtr number() {
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    // Optional exponent part: 1e-3, 2.5E+4.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      auto save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    const std::string token(text_.substr(start, pos_ - start));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError(start, "malformed number '" + token + "'");
    auto node = make(Node::Op::Const);
    node->value = value;
    return node;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) throw ParseError(pos_, std::string("expected '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  Expression e;
  e.root_ = std::shared_ptr<const Node>(std::move(root));
  e.text_ = std::string(text);
  e.uses_n_ = parser.uses_n;
  e.uses_x_ = parser.uses_x;
  return e;
}

double Expression::operator()(double n, double x) const { return root_->eval(n, x); }

double parse_constant(std::string_view text) {
  const auto e = Expression::parse(text);
  if (e.uses_n() || e.uses_x()) throw ParseError(0, "expected a constant, found a free symbol");
  return e(0.0, 0.0);
}

}  // namespace hyperlab

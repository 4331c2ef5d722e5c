#include "hyperlab/field_text.hpp"

#include <cctype>
#include <sstream>

namespace hyperlab {

namespace {

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace

std::string render_exponent(const Rational& q) {
  if (is_integer(q)) return q.str();
  return "(" + q.str() + ")";
}

std::string render(const RationalAsymptotic& a) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, c] : a.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    out << magnitude.str();
    if (q != 0) out << "*e^" << render_exponent(q);
    first = false;
  }
  if (first) out << '0';
  if (a.trunc_order()) out << " (+O(e^" << render_exponent(*a.trunc_order()) << "))";
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Rational relative_order)
      : text_(text), relative_order_(std::move(relative_order)) {}

  RationalAsymptotic parse() {
    auto value = expr();
    skip_space();
    // Rendered truncation suffix: "(+O(e^k))".
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const auto save = pos_;
      ++pos_;
      if (accept('+') && (skip_space(), pos_ < text_.size() && text_[pos_] == 'O')) {
        value = value + primary();
        expect(')');
        skip_space();
      } else {
        pos_ = save;
      }
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  RationalAsymptotic expr() {
    auto value = term();
    for (;;) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RationalAsymptotic term() {
    auto value = unary();
    for (;;) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const auto at = pos_;
        auto divisor = unary();
        if (divisor.is_zero()) {
          throw FieldError(FieldError::Kind::DivisionByZero,
                           "division by zero at position " + std::to_string(at));
        }
        value = value * inv(divisor, relative_order_);
      } else {
        return value;
      }
    }
  }

  RationalAsymptotic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalAsymptotic power() {
    const auto base_pos = (skip_space(), pos_);
    auto base = primary();
    if (!accept('^')) return base;
    const Rational k = exponent();
    if (is_integer(k)) {
      const auto n = boost::multiprecision::numerator(k);
      if (n < 0 && base.is_zero()) {
        throw FieldError(FieldError::Kind::DivisionByZero, "negative power of zero");
      }
      if (n > 1'000'000 || n < -1'000'000) fail("exponent too large", base_pos);
      if (n < 0) return pow(inv(base, relative_order_), -n.convert_to<long long>());
      return pow(base, n.convert_to<long long>());
    }
    // e^q for rational q: only a pure power of the generator.
    if (base.terms().size() != 1 || base.terms().begin()->second != 1 || !base.is_exact()) {
      fail("non-integer exponent requires a pure power of e", base_pos);
    }
    return RationalAsymptotic::monomial(Rational(1), base.terms().begin()->first * k);
  }

  RationalAsymptotic primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return RationalAsymptotic(number());
    if (ch == 'e') {
      ++pos_;
      return RationalAsymptotic::epsilon();
    }
    if (ch == 'O') {
      ++pos_;
      expect('(');
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != 'e') fail("expected 'e' inside O(...)");
      ++pos_;
      Rational order(1);
      if (accept('^')) order = exponent();
      expect(')');
      return RationalAsymptotic::big_o(order);
    }
    if (ch == '(') {
      ++pos_;
      auto value = expr();
      expect(')');
      return value;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Rational exponent() {
    skip_space();
    if (accept('(')) {
      const bool negative = accept('-');
      Rational value = integer();
      if (accept('/')) {
        const auto at = pos_;
        const Rational den = integer();
        if (den == 0) fail("zero denominator in exponent", at);
        value /= den;
      }
      expect(')');
      return negative ? Rational(-value) : value;
    }
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    const Rational value = integer();
    return negative ? Rational(-value) : value;
  }

  Rational integer() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Rational(boost::multiprecision::cpp_int(std::string(text_.substr(start, pos_ - start))));
  }

  Rational number() {
    const auto start = pos_;
    boost::multiprecision::cpp_int digits = 0;
    boost::multiprecision::cpp_int scale = 1;
    bool seen_digit = false;
    bool fraction = false;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits = digits * 10 + (ch - '0');
        if (fraction) scale *= 10;
        seen_digit = true;
      } else if (ch == '.' && !fraction) {
        fraction = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (!seen_digit) fail("malformed number", start);
    return Rational(digits, scale);
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
    if (!accept(ch)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "' before end of input");
      fail(std::string("expected '") + ch + "'");
    }
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(at, message);
  }

  std::string_view text_;
  Rational relative_order_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalAsymptotic parse_field_expression(std::string_view text, const Rational& relative_order) {
  return Parser(text, relative_order).parse();
}

std::string annotate(std::string_view text, const ParseError& error) {
  std::ostringstream out;
  out << "error at position " << error.position() << ": " << error.what() << '\n'
      << "  " << text << '\n'
      << "  " << std::string(error.position(), ' ') << '^';
  return out.str();
}

}  // namespace hyperlab

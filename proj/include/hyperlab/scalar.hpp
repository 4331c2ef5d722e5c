#pragma once

// Coefficient types for the asymptotic field.
//
//   Rational   - exact arbitrary-precision rational (field axioms hold exactly)
//   HighFloat  - binary floating point backed by MPFR; the working precision is
//                a runtime parameter (>= 64 bits) and every value records it
//
// ScalarTraits<S> is the small customization point the generic field code uses.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperlab {

using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kMinFloatPrecisionBits = 64;
inline constexpr unsigned kDefaultFloatPrecisionBits = 128;

// Sets the precision of HighFloat values created afterwards on this thread.
// Throws std::invalid_argument below kMinFloatPrecisionBits.
void set_float_precision_bits(unsigned bits);
unsigned float_precision_bits();
unsigned precision_bits_of(const HighFloat& value);

// Raised when a transcendental value is requested from the exact scalar at a
// point where it is irrational (e.g. sin(1/2) as a Rational).
class NotExactlyRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;

  static Rational from_rational(const Rational& q) { return q; }
  static double to_double(const Rational& q) { return q.convert_to<double>(); }
  static int sign(const Rational& q) { return q.sign(); }
  static std::string to_string(const Rational& q) { return q.str(); }

  // Elementary functions are exact only where their value is rational.
  static Rational sin(const Rational& c) {
    require(c == 0, "sin");
    return 0;
  }
  static Rational cos(const Rational& c) {
    require(c == 0, "cos");
    return 1;
  }
  static Rational exp(const Rational& c) {
    require(c == 0, "exp");
    return 1;
  }
  static Rational atan(const Rational& c) {
    require(c == 0, "atan");
    return 0;
  }
  static Rational log(const Rational& c) {
    require(c == 1, "log");
    return 0;
  }

 private:
  static void require(bool ok, const char* fn) {
    if (!ok) {
      throw NotExactlyRepresentable(std::string(fn) +
                                    " is irrational at this rational center");
    }
  }
};

template <>
struct ScalarTraits<HighFloat> {
  static constexpr bool exact = false;

  // Boost's direct rational conversion is generic and very slow; numerator
  // and denominator convert limb by limb.
  static HighFloat from_rational(const Rational& q) {
    return HighFloat(boost::multiprecision::numerator(q)) / HighFloat(boost::multiprecision::denominator(q));
  }
  static double to_double(const HighFloat& v) { return v.convert_to<double>(); }
  static int sign(const HighFloat& v) { return v.sign(); }
  static std::string to_string(const HighFloat& v) {
    return v.str(0, std::ios_base::scientific);
  }

  static HighFloat sin(const HighFloat& c) { return boost::multiprecision::sin(c); }
  static HighFloat cos(const HighFloat& c) { return boost::multiprecision::cos(c); }
  static HighFloat exp(const HighFloat& c) { return boost::multiprecision::exp(c); }
  static HighFloat atan(const HighFloat& c) { return boost::multiprecision::atan(c); }
  static HighFloat log(const HighFloat& c) { return boost::multiprecision::log(c); }

  // 2^-precision of the value: relative round-off unit.
  static HighFloat unit_roundoff(const HighFloat& v) {
    return boost::multiprecision::ldexp(HighFloat(1),
                                        -static_cast<int>(precision_bits_of(v)));
  }
};

}  // namespace hyperlab

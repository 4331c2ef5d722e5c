#include "hyperlab/scalar.hpp"

#include "hyperlab/asymptotic_number.hpp"

#include <cmath>

namespace hyperlab {

void set_float_precision_bits(unsigned bits) {
  if (bits < kMinFloatPrecisionBits) {
    throw std::invalid_argument("floating precision must be at least " +
                                std::to_string(kMinFloatPrecisionBits) + " bits");
  }
  // Boost expresses MPFR precision in decimal digits; round up so the binary
  // precision is never below the request.
  const auto digits10 = static_cast<unsigned>(std::ceil(bits * std::log10(2.0))) + 1;
  HighFloat::default_precision(digits10);
}

namespace {
// Boost's own default is 20 decimal digits; install ours before first use.
const bool kDefaultPrecisionInstalled = (set_float_precision_bits(kDefaultFloatPrecisionBits), true);
}  // namespace

unsigned float_precision_bits() { return precision_bits_of(HighFloat(0)); }

unsigned precision_bits_of(const HighFloat& value) {
  return static_cast<unsigned>(mpfr_get_prec(value.backend().data()));
}

const char* to_string(Magnitude m) {
  switch (m) {
    case Magnitude::Zero:
      return "Zero";
    case Magnitude::Infinitesimal:
      return "Infinitesimal";
    case Magnitude::Appreciable:
      return "Appreciable";
    case Magnitude::Unlimited:
      return "Unlimited";
  }
  return "?";
}

const char* to_string(Comparison::Kind k) {
  switch (k) {
    case Comparison::Kind::Less:
      return "Less";
    case Comparison::Kind::Greater:
      return "Greater";
    case Comparison::Kind::EqualWithinOrder:
      return "EqualWithinOrder";
  }
  return "?";
}

}  // namespace hyperlab

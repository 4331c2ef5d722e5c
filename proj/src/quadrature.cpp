#include "hyperlab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlab/summation.hpp"

namespace hyperlab::quad {

QuadratureResult sine_integral_between(double a, double b) {
  if (!(a > 0) || !(a <= b)) throw std::invalid_argument("sine_integral_between needs 0 < a <= b");
  using boost::math::quadrature::gauss_kronrod;
  const auto f = [](double t) { return std::sin(t) / t; };
  // Panels of one period keep each integrand piece smooth and low in degree.
  const double panel = 2 * std::numbers::pi;
  CompensatedSum value;
  double error = 0.0;
  for (double lo = a; lo < b; lo += panel) {
    const double hi = std::min(lo + panel, b);
    double err = 0.0;
    value += gauss_kronrod<double, 31>::integrate(f, lo, hi, 0, 0.0, &err);
    error += err;
  }
  return {value.value(), error};
}

QuadratureResult sine_integral_from_one(double cutoff) {
  if (!(cutoff >= 2)) throw std::invalid_argument("cutoff must be at least 2");
  auto body = sine_integral_between(1.0, cutoff);
  const double tail = std::cos(cutoff) / cutoff + std::sin(cutoff) / (cutoff * cutoff);
  return {body.value + tail, body.error_bound + 1.0 / (cutoff * cutoff)};
}

}  // namespace hyperlab::quad

#pragma once

// Reference values of integral_1^T sin(t)/t dt and integral_1^infinity sin(t)/t dt,
// computed by panelwise Gauss-Kronrod quadrature. Independent of every
// summation route in the case studies.

namespace hyperlab::quad {

struct QuadratureResult {
  double value;
  double error_bound;  // quadrature estimate plus tail bound
};

// integral_a^b sin(t)/t dt for 0 < a <= b.
QuadratureResult sine_integral_between(double a, double b);

// integral_1^infinity sin(t)/t dt as integral_1^T plus the asymptotic tail
// cos T/T + sin T/T^2, whose error is below 1/T^2.
QuadratureResult sine_integral_from_one(double cutoff = 1e6);

}  // namespace hyperlab::quad

#include "hyperlab/field_text.hpp"
#include "hyperlab/taylor_model.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace hyperlab {
namespace {

using A = RationalAsymptotic;
using F = FloatAsymptotic;

TEST(Compose, SineOfEpsilonIsMaclaurin) {
  const A r = compose_analytic(taylor::sin(Rational(0), 6), A::epsilon(), Rational(5));
  EXPECT_EQ(render(r), "1*e^1 - 1/6*e^3 + 1/120*e^5 (+O(e^5))");
}

TEST(Compose, ExpOfZeroIsOne) {
  EXPECT_EQ(render(compose_analytic(taylor::exp(Rational(0), 1), A(), Rational(7))), "1");
}

TEST(Compose, PythagoreanIdentityFloatPath) {
  const HighFloat half = HighFloat(1) / 2;
  const F a = F(half) + F::monomial(HighFloat(3), 1) - F::monomial(HighFloat(1), 2);
  const auto s = compose_analytic(taylor::sin(half, 7), a, Rational(6));
  const auto c = compose_analytic(taylor::cos(half, 7), a, Rational(6));
  const F one = s * s + c * c;
  const HighFloat u = ScalarTraits<HighFloat>::unit_roundoff(half);
  EXPECT_LT(abs(one.coefficient(0) - 1), 64 * u);
  for (const auto& [q, coef] : one.terms()) {
    if (q != 0) EXPECT_LT(abs(coef), 1e3 * u) << "exponent " << q;
  }
}

TEST(Compose, PythagoreanIdentityExactPath) {
  const A a = A::monomial(Rational(3), 1) - A::monomial(Rational(1), 2);
  const auto s = compose_analytic(taylor::sin(Rational(0), 9), a, Rational(8));
  const auto c = compose_analytic(taylor::cos(Rational(0), 9), a, Rational(8));
  EXPECT_EQ(render(s * s + c * c), "1 (+O(e^8))");
}

TEST(Compose, Errors) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const FieldError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no FieldError";
    return FieldError::Kind::DivisionByZero;
  };
  EXPECT_EQ(kind_of([] { compose_analytic(taylor::sin(Rational(0), 6), A(Rational(1)) + A::epsilon(), Rational(3)); }),
            FieldError::Kind::CenterMismatch);
  EXPECT_EQ(kind_of([] { compose_analytic(taylor::sin(Rational(0), 3), A::epsilon(), Rational(5)); }),
            FieldError::Kind::InsufficientTaylorOrder);
  EXPECT_EQ(kind_of([] {
              compose_analytic(taylor::sin(Rational(0), 9), A(A::epsilon().terms(), Rational(2)), Rational(5));
            }),
            FieldError::Kind::OrderBeyondTruncation);
  EXPECT_EQ(kind_of([] { compose_analytic(taylor::exp(Rational(0), 3), A::monomial(Rational(1), -1), Rational(2)); }),
            FieldError::Kind::UnlimitedArgument);
}

TEST(Compose, ReciprocalModelInvertsAwayFromZero) {
  const A a = A(Rational(2)) + A::epsilon();
  const auto r = compose_analytic(taylor::reciprocal(Rational(2), 9), a, Rational(8));
  EXPECT_TRUE(identical(r, inv(a).truncated(8)));
}

TEST(Compose, LogAndExpAreInverse) {
  const A a = A::monomial(Rational(1, 2), 1) + A::monomial(Rational(1, 3), 2);
  const auto ex = compose_analytic(taylor::exp(Rational(0), 7), a, Rational(6));
  const auto back = compose_analytic(taylor::log(Rational(1), 7), ex, Rational(6));
  EXPECT_TRUE(identical(back, a.truncated(6)));
}

// shadow(compose(f, a)) = f(shadow a); the coefficient of e in
// compose(f, center + e) is f'(center), checked against a central difference.
TEST(Compose, ConsistencyWithFiniteDifferences) {
  const HighFloat center = HighFloat(3) / 10;
  const F a = F(center) + F::epsilon();
  struct Case {
    TaylorModel<HighFloat> model;
    double (*fn)(double);
  };
  const Case cases[] = {{taylor::sin(center, 4), [](double x) { return std::sin(x); }},
                        {taylor::cos(center, 4), [](double x) { return std::cos(x); }},
                        {taylor::exp(center, 4), [](double x) { return std::exp(x); }},
                        {taylor::atan(center, 4), [](double x) { return std::atan(x); }},
                        {taylor::log(center, 4), [](double x) { return std::log(x); }},
                        {taylor::reciprocal(center, 4), [](double x) { return 1 / x; }}};
  const double x = 0.3;
  const double h = 1e-5;
  for (const auto& c : cases) {
    const auto r = compose_analytic(c.model, a, Rational(3));
    EXPECT_NEAR(r.coefficient(0).convert_to<double>(), c.fn(x), 1e-15);
    const double fd = (c.fn(x + h) - c.fn(x - h)) / (2 * h);
    // Central differences carry O(h^2 f''') truncation error.
    EXPECT_NEAR(r.coefficient(1).convert_to<double>(), fd, 1e-6 * (1 + std::abs(fd)));
  }
}

TEST(TaylorModels, AtanSeriesAtZero) {
  const auto m = taylor::atan(Rational(0), 8);
  const Rational expected[] = {0, 1, 0, Rational(-1, 3), 0, Rational(1, 5), 0, Rational(-1, 7)};
  for (int k = 0; k < 8; ++k) EXPECT_EQ(m.coefficients[k], expected[k]) << k;
}

TEST(TaylorModels, ExactScalarRefusesIrrationalValues) {
  EXPECT_THROW(taylor::sin(Rational(1, 2), 3), NotExactlyRepresentable);
}

}  // namespace
}  // namespace hyperlab

#include "hyperlab/asymptotic_number.hpp"
#include "hyperlab/field_text.hpp"
#include "random_field.hpp"

#include <gtest/gtest.h>

namespace hyperlab {
namespace {

using A = RationalAsymptotic;
using testing::agree_within_order;
using testing::FieldGen;

A eps() { return A::epsilon(); }
A c(long long v) { return A(Rational(v)); }
A mono(Rational coef, Rational exp) { return A::monomial(std::move(coef), std::move(exp)); }
A with_order(A a, Rational o) { return A(a.terms(), std::move(o)); }

TEST(Add, AdditiveInverseIsZero) {
  const A r = eps() + (-eps());
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(r.is_exact());
}

TEST(Add, DisjointSupportsMerge) {
  const A r = (c(3) + eps()) + (c(2) + eps() * eps());
  EXPECT_EQ(render(r), "5 + 1*e^1 + 1*e^2");
}

TEST(Add, TakesTheSmallerTruncationOrder) {
  const A a = with_order(c(1) - eps(), 2);
  const A b = with_order(eps() - pow(eps(), 3), 3);
  const A r = a + b;
  EXPECT_EQ(render(r), "1 (+O(e^2))");
  ASSERT_TRUE(r.trunc_order());
  EXPECT_EQ(*r.trunc_order(), 2);
}

TEST(Mul, InversePair) { EXPECT_EQ(render(eps() * inv(eps())), "1"); }

TEST(Mul, DifferenceOfSquares) { EXPECT_EQ(render((c(1) + eps()) * (c(1) - eps())), "1 - 1*e^2"); }

TEST(Mul, PolynomialExpansion) {
  const A r = (c(2) + mono(3, 1)) * (c(5) + eps());
  EXPECT_EQ(r.coefficient(0), 10);
  EXPECT_EQ(r.coefficient(1), 17);
  EXPECT_EQ(r.coefficient(2), 3);
  EXPECT_EQ(r.terms().size(), 3u);
}

TEST(Mul, TruncationOrderShiftsByLeastExponent) {
  // (e + O(e^3)) * (e^-1 + 2) : known up to min(3 - 1, inf + 1) = 2
  const A a = with_order(eps(), 3);
  const A b = inv(eps()) + c(2);
  const A r = a * b;
  ASSERT_TRUE(r.trunc_order());
  EXPECT_EQ(*r.trunc_order(), 2);
  EXPECT_EQ(render(r), "1 + 2*e^1 (+O(e^2))");
}

TEST(Mul, ExactZeroTimesTruncatedKeepsTheOrder) {
  const A r = A() * with_order(c(1), 4);
  EXPECT_TRUE(r.is_zero());
  ASSERT_TRUE(r.trunc_order());
  EXPECT_EQ(*r.trunc_order(), 4);
}

TEST(Inv, Monomial) { EXPECT_EQ(render(inv(eps())), "1*e^-1"); }

TEST(Inv, GeometricSeriesUpToOrder) {
  const A r = inv(with_order(c(1) - eps(), 4));
  EXPECT_EQ(render(r), "1 + 1*e^1 + 1*e^2 + 1*e^3 + 1*e^4 (+O(e^4))");
}

TEST(Inv, TwoPlusEpsilonMatchesAlternatingPowersOfHalf) {
  const A r = inv(c(2) + eps());
  for (int k = 0; k <= kDefaultRelativeOrder; ++k) {
    const Rational expected = Rational(k % 2 == 0 ? 1 : -1, 1) / Rational(boost::multiprecision::cpp_int(1) << (k + 1));
    EXPECT_EQ(r.coefficient(k), expected) << "k = " << k;
  }
  const A product = r * (c(2) + eps());
  EXPECT_EQ(product.terms().size(), 1u);
  EXPECT_EQ(product.coefficient(0), 1);
}

TEST(Inv, ZeroThrows) {
  try {
    (void)inv(A());
    FAIL() << "expected DivisionByZero";
  } catch (const FieldError& e) {
    EXPECT_EQ(e.kind(), FieldError::Kind::DivisionByZero);
  }
}

TEST(Compare, ExponentOrder) { EXPECT_EQ(compare(eps(), eps() * eps()).kind, Comparison::Kind::Greater); }

TEST(Compare, UnlimitedBeatsAnyScalar) {
  EXPECT_EQ(compare(inv(eps()), c(1'000'000)).kind, Comparison::Kind::Greater);
}

TEST(Compare, EqualWithinOrderCarriesTheOrder) {
  EXPECT_EQ(compare(c(1) + eps(), c(1) + eps()).kind, Comparison::Kind::EqualWithinOrder);
  const auto r = compare(with_order(c(1) + eps(), 3), c(1) + eps() + pow(eps(), 5));
  EXPECT_EQ(r.kind, Comparison::Kind::EqualWithinOrder);
  ASSERT_TRUE(r.order);
  EXPECT_EQ(*r.order, 3);
}

TEST(Classify, Variants) {
  EXPECT_EQ(classify(A()), Magnitude::Zero);
  EXPECT_EQ(classify(eps() - eps() * eps()), Magnitude::Infinitesimal);
  // 1/e (Euler) embedded as a rational stand-in: any nonzero constant.
  EXPECT_EQ(classify(A(Rational(367879, 1000000))), Magnitude::Appreciable);
  EXPECT_EQ(classify(inv(eps())), Magnitude::Unlimited);
}

TEST(Shadow, Examples) {
  EXPECT_EQ(shadow(c(3) + mono(5, 1) - eps() * eps()), 3);
  EXPECT_EQ(shadow(eps()), 0);
  try {
    (void)shadow(inv(eps()));
    FAIL() << "expected UnlimitedArgument";
  } catch (const FieldError& e) {
    EXPECT_EQ(e.kind(), FieldError::Kind::UnlimitedArgument);
  }
}

TEST(Reciprocal, InfinitelyCloseInfinitesimalsHaveFarApartReciprocals) {
  EXPECT_EQ(classify(eps() - eps() * eps()), Magnitude::Infinitesimal);
  EXPECT_EQ(classify(inv(eps()) - inv(eps() * eps())), Magnitude::Unlimited);
}

TEST(Normalization, ZeroCoefficientsAndOrderAreDropped) {
  A::Terms terms{{Rational(0), Rational(0)}, {Rational(1), Rational(2)}, {Rational(5), Rational(1)}};
  const A a(terms, Rational(3));
  EXPECT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.coefficient(1), 2);
}

// ---------------------------------------------------------------------------
// Properties over seeded random elements.

constexpr int kTrials = 2000;

TEST(FieldProperties, RingLawsExact) {
  FieldGen gen(1);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.element(), b = gen.element(), d = gen.element();
    ASSERT_TRUE(identical((a + b) + d, a + (b + d)));
    ASSERT_TRUE(identical(a + b, b + a));
    ASSERT_TRUE(identical((a * b) * d, a * (b * d)));
    ASSERT_TRUE(identical(a * b, b * a));
    ASSERT_TRUE(identical(a * (b + d), a * b + a * d));
  }
}

TEST(FieldProperties, RingLawsAfterTruncationAlignment) {
  FieldGen gen(2);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.element(-6, 6, Rational(4)), b = gen.element(-6, 6, Rational(5)), d = gen.element(-6, 6, Rational(3));
    ASSERT_TRUE(agree_within_order((a * b) * d, a * (b * d)));
    ASSERT_TRUE(agree_within_order(a * (b + d), a * b + a * d));
    ASSERT_TRUE(agree_within_order((a + b) + d, a + (b + d)));
  }
}

TEST(FieldProperties, InverseProductIsOne) {
  FieldGen gen(3);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.nonzero();
    const A p = a * inv(a);
    ASSERT_EQ(p.terms().size(), 1u) << render(a) << " -> " << render(p);
    ASSERT_EQ(p.coefficient(0), 1);
  }
}

TEST(FieldProperties, OrderCompatibility) {
  FieldGen gen(4);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.element(), b = gen.element(), d = gen.element();
    if (compare(a, b).kind == Comparison::Kind::Less) {
      ASSERT_EQ(compare(a + d, b + d).kind, Comparison::Kind::Less);
    }
    if (compare(A(), a).kind == Comparison::Kind::Less && compare(A(), b).kind == Comparison::Kind::Less) {
      ASSERT_EQ(compare(A(), a * b).kind, Comparison::Kind::Less);
    }
  }
}

TEST(FieldProperties, Trichotomy) {
  FieldGen gen(5);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.element(), b = gen.element();
    const auto ab = compare(a, b).kind;
    const auto ba = compare(b, a).kind;
    if ((a - b).is_zero()) {
      ASSERT_EQ(ab, Comparison::Kind::EqualWithinOrder);
      continue;
    }
    ASSERT_NE(ab, Comparison::Kind::EqualWithinOrder);
    ASSERT_EQ(ab == Comparison::Kind::Less, ba == Comparison::Kind::Greater);
  }
}

TEST(FieldProperties, EpsilonIsBelowEveryPositiveRational) {
  FieldGen gen(6);
  for (int i = 0; i < kTrials; ++i) {
    const A r(gen.positive_rational());
    ASSERT_EQ(compare(A(), eps()).kind, Comparison::Kind::Less);
    ASSERT_EQ(compare(eps(), r).kind, Comparison::Kind::Less);
  }
}

TEST(FieldProperties, ShadowIsAHomomorphismOnLimitedElements) {
  FieldGen gen(7);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.element(0, 6), b = gen.element(0, 6);
    ASSERT_EQ(shadow(a + b), shadow(a) + shadow(b));
    ASSERT_EQ(shadow(a * b), shadow(a) * shadow(b));
  }
}

TEST(FieldProperties, ReciprocalOfInfinitesimalIsUnlimited) {
  FieldGen gen(8);
  for (int i = 0; i < kTrials; ++i) {
    const A a = gen.nonzero(1, 6);
    ASSERT_EQ(classify(inv(a)), Magnitude::Unlimited);
  }
}

TEST(FloatScalar, RecordsPrecision) {
  set_float_precision_bits(200);
  const HighFloat x = HighFloat(1) / 3;
  // MPFR precision is requested in decimal digits, so it rounds up.
  EXPECT_GE(precision_bits_of(x), 200u);
  EXPECT_LT(precision_bits_of(x), 210u);
  set_float_precision_bits(kDefaultFloatPrecisionBits);
  EXPECT_THROW(set_float_precision_bits(32), std::invalid_argument);
}

TEST(FloatScalar, ConvertedArithmeticTracksExact) {
  FieldGen gen(9);
  for (int i = 0; i < 200; ++i) {
    const A a = gen.element(), b = gen.element();
    const auto exact = (a * b + a).convert<HighFloat>();
    const auto fa = a.convert<HighFloat>(), fb = b.convert<HighFloat>();
    const auto approx = fa * fb + fa;
    const auto diff = exact - approx;
    for (const auto& [q, coef] : diff.terms()) ASSERT_LT(abs(coef), 1e-30);
  }
}

}  // namespace
}  // namespace hyperlab

#include "hyperlab/sequence_model.hpp"
#include "random_field.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace hyperlab::seq {
namespace {

HyperSeq fn(double (*f)(Index), std::string label) { return HyperSeq([f](Index k) { return f(k); }, std::move(label)); }

TEST(SeqArith, Examples) {
  const HyperSeq inv_k = fn([](Index k) { return 1.0 / k; }, "1/k");
  const HyperSeq neg_inv_k = fn([](Index k) { return -1.0 / k; }, "-1/k");
  const HyperSeq sum = inv_k + neg_inv_k;
  const HyperSeq prod = HyperSeq::identity() * inv_k;
  const HyperSeq a = HyperSeq::constant(1) - inv_k;
  const HyperSeq b = HyperSeq::constant(1) + inv_k;
  for (Index k : {2, 10, 100}) {
    EXPECT_EQ(sum(k), 0.0);
    EXPECT_DOUBLE_EQ(prod(k), 1.0);
    EXPECT_NEAR((a * b)(k), 1.0 - 1.0 / (double(k) * k), 1e-15);
  }
  EXPECT_NE(sum.label().find("1/k"), std::string::npos);
}

TEST(SeqArith, RingLawsTermwise) {
  testing::FieldGen gen(11);
  for (int i = 0; i < 100; ++i) {
    const auto u = realize(gen.element()), v = realize(gen.element()), w = realize(gen.element());
    for (Index k : {1, 7, 1000}) {
      const double lhs = (u * (v + w))(k);
      const double rhs = (u * v + u * w)(k);
      ASSERT_NEAR(lhs, rhs, 1e-9 * (1 + std::abs(lhs)));
      ASSERT_EQ((u + v)(k), (v + u)(k));
      ASSERT_EQ((u * v)(k), (v * u)(k));
    }
  }
}

TEST(IsNegligible, InverseHolds) {
  const auto v = is_negligible(fn([](Index k) { return 1.0 / k; }, "1/k"));
  EXPECT_EQ(v.kind, EventualVerdict::Kind::HoldsOnWindow);
  EXPECT_EQ(v.first_index, 1000);
}

TEST(IsNegligible, CompoundInterestFailsRepeatedly) {
  const auto v = is_negligible(fn([](Index k) { return std::pow(1.0 - 1.0 / k, double(k)); }, "(1-1/k)^k"));
  ASSERT_EQ(v.kind, EventualVerdict::Kind::FailsRepeatedly);
  EXPECT_GE(v.witness_indices.size(), 3u);
  for (Index k : v.witness_indices) {
    EXPECT_GE(k, 1000);
    EXPECT_LT(k, 2000);
  }
  EXPECT_NEAR(v.stats.max_abs, std::exp(-1.0), 1e-3);
}

// Frozen from a scan of the default window: 879 violations, smallest |u| 1.3e-5.
TEST(IsNegligible, SineOverLogIsInconclusive) {
  const auto v = is_negligible(fn([](Index k) { return std::sin(double(k)) / std::log(double(k)); }, "sin k/log k"));
  EXPECT_EQ(v.kind, EventualVerdict::Kind::Inconclusive);
  EXPECT_EQ(v.stats.violations, 879);
  EXPECT_LT(v.stats.min_abs, 2e-5);
}

TEST(IsNegligible, RejectsEmptyWindow) {
  EvalWindow w;
  w.length = 0;
  EXPECT_THROW(is_negligible(HyperSeq::constant(0), w), std::invalid_argument);
}

// Brute force of the construction on closed forms, without HyperSeq.
Index brute_force(double (*member)(Index m, Index j), Index k) {
  const auto look = static_cast<Index>(std::floor(std::log(double(k))));
  Index best = 0;
  for (Index i = 1; i <= k; ++i) {
    bool ok = true;
    for (Index j = k; j <= k + look && ok; ++j) ok = std::abs(member(i, j)) < 1.0 / double(i);
    if (!ok) break;
    best = i;
  }
  return best == 0 ? 1 : best;
}

SeqFamily family_of(double (*member)(Index, Index)) {
  return [member](Index m) { return HyperSeq([member, m](Index k) { return member(m, k); }, "member"); };
}

double m_over_k(Index m, Index k) { return double(m) / double(k); }
double zero(Index, Index) { return 0.0; }
double one_over_m(Index m, Index) { return 1.0 / double(m); }

TEST(Overspill, MOverKGrowsLikeRootK) {
  const auto family = family_of(m_over_k);
  const auto n = diagonal_overspill(family);
  const auto diag = overspill_diagonal_trace(family);
  for (Index k = 1000; k <= 1100; ++k) {
    ASSERT_EQ(n(k), double(brute_force(m_over_k, k)));
    ASSERT_EQ(n(k), std::ceil(std::sqrt(double(k))) - 1);
    ASSERT_LT(diag(k), default_tolerance(k));
  }
  EXPECT_GE(n(10'000), n(100));
  EXPECT_EQ(n(10'000), 99);
}

TEST(Overspill, ZeroFamilyHasMaximalGrowth) {
  const auto family = family_of(zero);
  const auto n = diagonal_overspill(family);
  for (Index k : {1, 10, 1000, 5000}) EXPECT_EQ(n(k), double(k));
  EXPECT_EQ(overspill_diagonal_trace(family)(5000), 0.0);
}

// Under the strict bound |family(i)(j)| < 1/i the constant family 1/i never
// qualifies, so the construction falls back to N = 1 and the diagonal is 1.
TEST(Overspill, ReciprocalIndexFamilyFallsBack) {
  const auto family = family_of(one_over_m);
  const auto n = diagonal_overspill(family);
  for (Index k : {1, 100, 1000, 10'000}) {
    EXPECT_EQ(n(k), double(brute_force(one_over_m, k)));
    EXPECT_EQ(n(k), 1.0);
  }
  EXPECT_EQ(overspill_diagonal_trace(family)(10'000), 1.0);
}

TEST(CompareIndices, Examples) {
  const auto k = HyperSeq::identity();
  const HyperSeq two_k([](Index i) { return 2.0 * double(i); }, "2k");
  const HyperSeq wobble([](Index i) { return double(i + (i % 2 == 0 ? 1 : -1)); }, "k+(-1)^k");
  EXPECT_EQ(compare_indices(k, two_k).kind, IndexComparison::Kind::EventuallyGreater);
  EXPECT_EQ(compare_indices(two_k, k).kind, IndexComparison::Kind::EventuallyLess);
  EXPECT_EQ(compare_indices(k, k).kind, IndexComparison::Kind::EventuallyEqual);
  const auto w = compare_indices(k, wobble);
  ASSERT_EQ(w.kind, IndexComparison::Kind::Incomparable);
  EXPECT_EQ(w.greater_witnesses.size(), 3u);
  EXPECT_EQ(w.other_witnesses.size(), 3u);
  for (Index i : w.greater_witnesses) EXPECT_GT(wobble(i), k(i));
  for (Index i : w.other_witnesses) EXPECT_LT(wobble(i), k(i));
}

TEST(CompareIndices, StableUnderWindowEnlargement) {
  const auto k = HyperSeq::identity();
  const HyperSeq shifted([](Index i) { return double(i + 5); }, "k+5");
  const HyperSeq square([](Index i) { return double(i * i); }, "k^2");
  EvalWindow w;
  EvalWindow w2 = w;
  w2.length *= 2;
  for (const auto* other : {&shifted, &square}) {
    EXPECT_EQ(compare_indices(k, *other, w).kind, compare_indices(k, *other, w2).kind);
  }
}

TEST(CompareIndices, RejectsNonIntegers) {
  const HyperSeq half([](Index i) { return double(i) + 0.5; }, "k+1/2");
  EXPECT_THROW(compare_indices(HyperSeq::identity(), half), std::invalid_argument);
}

// Realizations agree with the field's classification. Elements use exponents
// in {0} and [1, 3] so that realized tails decay at least like 1/k.
TEST(Consistency, RealizationMatchesClassification) {
  testing::FieldGen gen(12);
  for (int i = 0; i < 200; ++i) {
    const RationalAsymptotic a = gen.element(2, 6);
    const RationalAsymptotic infinitesimal = a - RationalAsymptotic(a.coefficient(0));
    if (!infinitesimal.is_zero()) {
      ASSERT_EQ(classify(infinitesimal), Magnitude::Infinitesimal);
      ASSERT_EQ(is_negligible(realize(infinitesimal)).kind, EventualVerdict::Kind::HoldsOnWindow);
    }
    const RationalAsymptotic appreciable = infinitesimal + RationalAsymptotic(Rational(7, 3));
    ASSERT_EQ(classify(appreciable), Magnitude::Appreciable);
    const double s = shadow(appreciable).convert_to<double>();
    ASSERT_EQ(is_negligible(realize(appreciable) - HyperSeq::constant(s)).kind, EventualVerdict::Kind::HoldsOnWindow);
  }
}

}  // namespace
}  // namespace hyperlab::seq

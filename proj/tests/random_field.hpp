#pragma once

// Seeded generators of random exact field elements for property tests.

#include "hyperlab/asymptotic_number.hpp"

#include <optional>
#include <random>

namespace hyperlab::testing {

class FieldGen {
 public:
  explicit FieldGen(std::uint64_t seed) : rng_(seed) {}

  Rational coefficient() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int p = 0;
    while (p == 0) p = num(rng_);
    return Rational(p, den(rng_));
  }

  Rational positive_rational() {
    std::uniform_int_distribution<int> num(1, 1'000'000);
    std::uniform_int_distribution<int> den(1, 1'000'000);
    return Rational(num(rng_), den(rng_));
  }

  // Exponents are halves in [lo, hi].
  RationalAsymptotic element(int lo_halves = -6, int hi_halves = 6, std::optional<Rational> order = std::nullopt) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> exp(lo_halves, hi_halves);
    RationalAsymptotic::Terms terms;
    const int n = count(rng_);
    for (int i = 0; i < n; ++i) terms[Rational(exp(rng_), 2)] = coefficient();
    return RationalAsymptotic(std::move(terms), std::move(order));
  }

  RationalAsymptotic nonzero(int lo_halves = -6, int hi_halves = 6, std::optional<Rational> order = std::nullopt) {
    for (;;) {
      auto a = element(lo_halves, hi_halves, order);
      if (!a.is_zero()) return a;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// a and b agree on every exponent both of them know.
inline bool agree_within_order(const RationalAsymptotic& a, const RationalAsymptotic& b) {
  const auto& oa = a.trunc_order();
  const auto& ob = b.trunc_order();
  if (!oa && !ob) return identical(a, b);
  const Rational o = !oa ? *ob : !ob ? *oa : std::min(*oa, *ob);
  return identical(a.truncated(o), b.truncated(o));
}

}  // namespace hyperlab::testing

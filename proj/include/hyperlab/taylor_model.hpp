#pragma once

// Taylor data of an analytic function at a center, and its composition with
// asymptotic numbers. This is how elementary functions act on hyperreal
// inputs: f(c + h) = sum_k f_k h^k with h infinitesimal.

#include "hyperlab/asymptotic_number.hpp"

#include <optional>
#include <vector>

namespace hyperlab {

template <class S>
struct TaylorModel {
  S center;
  std::vector<S> coefficients;  // f^(k)(center) / k!
  std::optional<S> radius_hint;

  S value_at_center() const { return coefficients.at(0); }
};

namespace taylor {

namespace detail {

inline void require_count(std::size_t count) {
  if (count == 0) throw std::invalid_argument("a Taylor model needs at least one coefficient");
}

}  // namespace detail

template <class S>
TaylorModel<S> sin(const S& center, std::size_t count) {
  detail::require_count(count);
  const S s = ScalarTraits<S>::sin(center);
  const S c = ScalarTraits<S>::cos(center);
  const S cycle[4] = {s, c, -s, -c};
  TaylorModel<S> m{center, {}, std::nullopt};
  S factorial(1);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= S(static_cast<long long>(k));
    m.coefficients.push_back(cycle[k % 4] / factorial);
  }
  return m;
}

template <class S>
TaylorModel<S> cos(const S& center, std::size_t count) {
  detail::require_count(count);
  const S s = ScalarTraits<S>::sin(center);
  const S c = ScalarTraits<S>::cos(center);
  const S cycle[4] = {c, -s, -c, s};
  TaylorModel<S> m{center, {}, std::nullopt};
  S factorial(1);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= S(static_cast<long long>(k));
    m.coefficients.push_back(cycle[k % 4] / factorial);
  }
  return m;
}

template <class S>
TaylorModel<S> exp(const S& center, std::size_t count) {
  detail::require_count(count);
  const S v = ScalarTraits<S>::exp(center);
  TaylorModel<S> m{center, {}, std::nullopt};
  S factorial(1);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= S(static_cast<long long>(k));
    m.coefficients.push_back(v / factorial);
  }
  return m;
}

// 1/x about a nonzero center: (-1)^k / c^{k+1}.
template <class S>
TaylorModel<S> reciprocal(const S& center, std::size_t count) {
  detail::require_count(count);
  if (center == 0) throw std::invalid_argument("reciprocal model needs a nonzero center");
  TaylorModel<S> m{center, {}, center < 0 ? S(-center) : center};
  S term = S(1) / center;
  for (std::size_t k = 0; k < count; ++k) {
    m.coefficients.push_back(term);
    term = -term / center;
  }
  return m;
}

// log about a positive center: log c, then (-1)^{k+1} / (k c^k).
template <class S>
TaylorModel<S> log(const S& center, std::size_t count) {
  detail::require_count(count);
  if (!(center > 0)) throw std::invalid_argument("log model needs a positive center");
  TaylorModel<S> m{center, {ScalarTraits<S>::log(center)}, center};
  S power = center;
  for (std::size_t k = 1; k < count; ++k) {
    const S sign = (k % 2 == 1) ? S(1) : S(-1);
    m.coefficients.push_back(sign / (S(static_cast<long long>(k)) * power));
    power *= center;
  }
  return m;
}

// atan about c: the derivative 1/(1 + c^2 + 2c h + h^2) is expanded by the
// linear recurrence for the reciprocal of a quadratic, then integrated.
template <class S>
TaylorModel<S> atan(const S& center, std::size_t count) {
  detail::require_count(count);
  const S a0 = S(1) + center * center;
  const S a1 = S(2) * center;
  std::vector<S> inv_quad;
  for (std::size_t k = 0; k + 1 < count; ++k) {
    S b = (k == 0) ? S(1) : S(0);
    if (k >= 1) b -= a1 * inv_quad[k - 1];
    if (k >= 2) b -= inv_quad[k - 2];
    inv_quad.push_back(b / a0);
  }
  TaylorModel<S> m{center, {ScalarTraits<S>::atan(center)}, std::nullopt};
  for (std::size_t k = 0; k + 1 < count; ++k) {
    m.coefficients.push_back(inv_quad[k] / S(static_cast<long long>(k + 1)));
  }
  return m;
}

}  // namespace taylor

// Evaluates sum_k f.coefficients[k] * (a - center)^k truncated at `order`.
// Requires a limited with shadow equal to the model's center and
// order <= a's truncation order.
template <class S>
AsymptoticNumber<S> compose_analytic(const TaylorModel<S>& f, const AsymptoticNumber<S>& a,
                                     const Rational& order) {
  if (f.coefficients.empty()) {
    throw FieldError(FieldError::Kind::InsufficientTaylorOrder, "empty Taylor model");
  }
  if (a.trunc_order() && order > *a.trunc_order()) {
    throw FieldError(FieldError::Kind::OrderBeyondTruncation,
                     "requested order exceeds the argument's truncation order");
  }
  if (shadow(a) != f.center) {
    throw FieldError(FieldError::Kind::CenterMismatch,
                     "shadow of the argument differs from the Taylor center");
  }
  const auto h = (a - AsymptoticNumber<S>(f.center)).truncated(order);
  if (h.is_zero()) {
    AsymptoticNumber<S> value(f.coefficients[0]);
    return a.is_exact() ? value : value.truncated(order);
  }

  // Powers h^k with k*lexp(h) > order vanish after truncation.
  const Rational lead = *h.least_exponent();
  const Rational ratio = order / lead;
  const std::size_t needed =
      order < lead ? 0
                   : static_cast<std::size_t>(boost::multiprecision::numerator(ratio) /
                                              boost::multiprecision::denominator(ratio));
  if (f.coefficients.size() <= needed) {
    throw FieldError(FieldError::Kind::InsufficientTaylorOrder,
                     "Taylor model has " + std::to_string(f.coefficients.size()) +
                         " coefficients, " + std::to_string(needed + 1) + " needed");
  }

  auto result = AsymptoticNumber<S>(f.coefficients[0]).truncated(order);
  auto power = AsymptoticNumber<S>(S(1));
  for (std::size_t k = 1; k <= needed; ++k) {
    power = mul(power, h).truncated(order);
    result = add(result, mul(AsymptoticNumber<S>(f.coefficients[k]), power));
  }
  return result.truncated(order);
}

}  // namespace hyperlab

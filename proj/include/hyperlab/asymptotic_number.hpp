#pragma once

// Truncated asymptotic series in one positive infinitesimal generator e:
//
//     a = sum_i c_i * e^{q_i}   (+ O(e^O))
//
// with exact rational exponents q_i, coefficients c_i in a scalar field S, and
// an optional truncation order O. Exponents greater than O are unknown. An
// element without a truncation order is exact (all further coefficients are
// zero). Reading e = 1/n for an infinite index n, the element stands for the
// sequence n -> sum_i c_i n^{-q_i}.
//
// Normal form: no stored coefficient is zero and every stored exponent is
// <= O. The zero element has an empty term map.

#include "hyperlab/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>

namespace hyperlab {

class FieldError : public std::domain_error {
 public:
  enum class Kind {
    DivisionByZero,
    UnlimitedArgument,
    TruncatedStandardPart,
    CenterMismatch,
    InsufficientTaylorOrder,
    OrderBeyondTruncation,
  };

  FieldError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class Magnitude { Zero, Infinitesimal, Appreciable, Unlimited };

const char* to_string(Magnitude m);

// Result of compare(a, b). When a - b vanishes up to the common truncation
// order the answer is EqualWithinOrder; `order` is that order, or empty when
// both operands are exact (genuine equality).
struct Comparison {
  enum class Kind { Less, Greater, EqualWithinOrder };
  Kind kind;
  std::optional<Rational> order;

  bool operator==(Kind k) const { return kind == k; }
};

const char* to_string(Comparison::Kind k);

// Relative expansion depth used when inverting an exact element that is not a
// monomial: the geometric tail is kept up to e^{depth} relative to the leading term.
inline constexpr int kDefaultRelativeOrder = 8;

template <class S>
class AsymptoticNumber {
 public:
  using Scalar = S;
  using Terms = std::map<Rational, S>;

  AsymptoticNumber() = default;
  explicit AsymptoticNumber(S constant) { insert(Rational(0), std::move(constant)); }

  AsymptoticNumber(Terms terms, std::optional<Rational> trunc_order)
      : trunc_order_(std::move(trunc_order)) {
    for (auto& [q, c] : terms) {
      insert(q, std::move(c));
    }
  }

  static AsymptoticNumber monomial(S coefficient, Rational exponent) {
    AsymptoticNumber r;
    r.insert(exponent, std::move(coefficient));
    return r;
  }

  // The generator e itself.
  static AsymptoticNumber epsilon() { return monomial(S(1), Rational(1)); }

  // 0 + O(e^order).
  static AsymptoticNumber big_o(Rational order) {
    AsymptoticNumber r;
    r.trunc_order_ = std::move(order);
    return r;
  }

  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& trunc_order() const { return trunc_order_; }
  bool is_exact() const { return !trunc_order_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  std::optional<Rational> least_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  // lexp with the convention lexp(0) = 0.
  Rational least_exponent_or_zero() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->first;
  }

  S coefficient(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? S(0) : it->second;
  }

  // Drops every term above `order` and lowers the truncation order to it.
  AsymptoticNumber truncated(const Rational& order) const {
    AsymptoticNumber r;
    r.trunc_order_ = trunc_order_ ? std::min(*trunc_order_, order) : order;
    for (const auto& [q, c] : terms_) {
      if (q > *r.trunc_order_) break;
      r.terms_.emplace(q, c);
    }
    return r;
  }

  AsymptoticNumber operator-() const {
    AsymptoticNumber r;
    r.trunc_order_ = trunc_order_;
    for (const auto& [q, c] : terms_) r.terms_.emplace(q, S(-c));
    return r;
  }

  friend bool identical(const AsymptoticNumber& a, const AsymptoticNumber& b) {
    return a.trunc_order_ == b.trunc_order_ && a.terms_ == b.terms_;
  }

  template <class T>
  AsymptoticNumber<T> convert() const {
    typename AsymptoticNumber<T>::Terms out;
    for (const auto& [q, c] : terms_) {
      if constexpr (std::is_same_v<S, Rational>) {
        out.emplace(q, ScalarTraits<T>::from_rational(c));
      } else {
        out.emplace(q, T(c));
      }
    }
    return AsymptoticNumber<T>(std::move(out), trunc_order_);
  }

 private:
  template <class>
  friend class AsymptoticNumber;
  template <class T>
  friend AsymptoticNumber<T> add(const AsymptoticNumber<T>&, const AsymptoticNumber<T>&);
  template <class T>
  friend AsymptoticNumber<T> mul(const AsymptoticNumber<T>&, const AsymptoticNumber<T>&);

  void insert(const Rational& q, S c) {
    if (trunc_order_ && q > *trunc_order_) return;
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(q, std::move(c));
    if (!fresh) {
      throw std::invalid_argument("duplicate exponent in asymptotic number");
    }
  }

  Terms terms_;
  std::optional<Rational> trunc_order_;
};

namespace detail {

inline std::optional<Rational> min_order(const std::optional<Rational>& a,
                                         const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

inline std::optional<Rational> shift_order(const std::optional<Rational>& o, const Rational& d) {
  if (!o) return std::nullopt;
  return *o + d;
}

}  // namespace detail

template <class S>
AsymptoticNumber<S> add(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  AsymptoticNumber<S> r;
  r.trunc_order_ = detail::min_order(a.trunc_order_, b.trunc_order_);
  auto keep = [&](const Rational& q) { return !r.trunc_order_ || q <= *r.trunc_order_; };
  for (const auto& [q, c] : a.terms_) {
    if (keep(q)) r.terms_.emplace(q, c);
  }
  for (const auto& [q, c] : b.terms_) {
    if (!keep(q)) continue;
    auto [it, fresh] = r.terms_.try_emplace(q, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

// Cauchy product. The truncation order is
//   min(a.O + lexp(b), b.O + lexp(a)),  lexp(0) = 0.
template <class S>
AsymptoticNumber<S> mul(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  AsymptoticNumber<S> r;
  r.trunc_order_ =
      detail::min_order(detail::shift_order(a.trunc_order_, b.least_exponent_or_zero()),
                        detail::shift_order(b.trunc_order_, a.least_exponent_or_zero()));
  for (const auto& [qa, ca] : a.terms_) {
    for (const auto& [qb, cb] : b.terms_) {
      Rational q = qa + qb;
      if (r.trunc_order_ && q > *r.trunc_order_) break;
      auto [it, fresh] = r.terms_.try_emplace(q, S(ca * cb));
      if (!fresh) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// Reciprocal: leading-term inverse times the geometric expansion of the tail.
// For a with leading exponent q0 and truncation order O the result is known up
// to O - 2*q0. Exact monomials invert exactly; other exact elements are
// expanded to `relative_order` beyond the leading term.
template <class S>
AsymptoticNumber<S> inv(const AsymptoticNumber<S>& a,
                        const Rational& relative_order = Rational(kDefaultRelativeOrder)) {
  if (a.is_zero()) {
    throw FieldError(FieldError::Kind::DivisionByZero, "inverse of zero");
  }
  const auto& [q0, c0] = *a.terms().begin();
  const S lead_inv = S(1) / c0;
  auto leading = AsymptoticNumber<S>::monomial(lead_inv, -q0);

  if (a.is_exact() && a.terms().size() == 1) return leading;

  // a = c0 e^q0 (1 + t), t infinitesimal, known up to e^rel.
  const Rational rel = a.trunc_order() ? *a.trunc_order() - q0 : relative_order;
  typename AsymptoticNumber<S>::Terms tail;
  for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it) {
    tail.emplace(it->first - q0, S(it->second * lead_inv));
  }
  const auto minus_t = -AsymptoticNumber<S>(std::move(tail), rel);

  auto series = AsymptoticNumber<S>(S(1)).truncated(rel);
  auto power = series;
  for (;;) {
    power = mul(power, minus_t).truncated(rel);
    if (power.is_zero()) break;
    series = add(series, power);
  }
  return mul(leading, series);
}

template <class S>
AsymptoticNumber<S> operator+(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  return add(a, b);
}
template <class S>
AsymptoticNumber<S> operator-(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  return add(a, -b);
}
template <class S>
AsymptoticNumber<S> operator*(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  return mul(a, b);
}
template <class S>
AsymptoticNumber<S> operator/(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  return mul(a, inv(b));
}

template <class S>
Comparison compare(const AsymptoticNumber<S>& a, const AsymptoticNumber<S>& b) {
  const auto d = a - b;
  if (d.is_zero()) return {Comparison::Kind::EqualWithinOrder, d.trunc_order()};
  const int sign = ScalarTraits<S>::sign(d.terms().begin()->second);
  return {sign > 0 ? Comparison::Kind::Greater : Comparison::Kind::Less, std::nullopt};
}

template <class S>
Magnitude classify(const AsymptoticNumber<S>& a) {
  const auto q = a.least_exponent();
  if (!q) return Magnitude::Zero;
  if (*q > 0) return Magnitude::Infinitesimal;
  if (*q == 0) return Magnitude::Appreciable;
  return Magnitude::Unlimited;
}

// Standard part of a limited element.
template <class S>
S shadow(const AsymptoticNumber<S>& a) {
  if (classify(a) == Magnitude::Unlimited) {
    throw FieldError(FieldError::Kind::UnlimitedArgument, "shadow of an unlimited element");
  }
  if (a.trunc_order() && *a.trunc_order() < 0) {
    throw FieldError(FieldError::Kind::TruncatedStandardPart,
                     "standard part lies beyond the truncation order");
  }
  return a.coefficient(Rational(0));
}

// Integer power by repeated squaring; negative powers go through inv().
template <class S>
AsymptoticNumber<S> pow(const AsymptoticNumber<S>& a, long long k) {
  if (k < 0) return pow(inv(a), -k);
  AsymptoticNumber<S> result(S(1));
  AsymptoticNumber<S> base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

using RationalAsymptotic = AsymptoticNumber<Rational>;
using FloatAsymptotic = AsymptoticNumber<HighFloat>;

}  // namespace hyperlab

#include "hyperlab/family.hpp"

#include "hyperlab/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperlab::conv {

FunctionFamily FunctionFamily::series(std::string name, TermFn term, Interval domain, LimitFn limit) {
  FunctionFamily f;
  f.name_ = std::move(name);
  f.term_ = std::move(term);
  f.domain_ = domain;
  f.limit_ = std::move(limit);
  f.validate();
  return f;
}

FunctionFamily FunctionFamily::sequence(std::string name, TermFn partial_sum, Interval domain,
                                        LimitFn limit) {
  FunctionFamily f;
  f.name_ = std::move(name);
  f.partial_sum_ = std::move(partial_sum);
  f.domain_ = domain;
  f.limit_ = std::move(limit);
  f.validate();
  return f;
}

void FunctionFamily::validate() const {
  if (!term_ && !partial_sum_) throw FamilyError("family needs a term or a partial sum");
  if (!(domain_.lo <= domain_.hi) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi)) {
    throw FamilyError("domain must be a finite interval with lo <= hi");
  }
}

FunctionFamily& FunctionFamily::with_domain(Interval domain) {
  domain_ = domain;
  validate();
  return *this;
}

FunctionFamily& FunctionFamily::with_singular_points(std::vector<double> points) {
  singular_points_ = std::move(points);
  return *this;
}

FunctionFamily& FunctionFamily::with_limit(LimitFn limit) {
  limit_ = std::move(limit);
  return *this;
}

double FunctionFamily::term(Count n, double x) const {
  if (term_) return term_(n, x);
  return n == 0 ? partial_sum_(0, x) : partial_sum_(n, x) - partial_sum_(n - 1, x);
}

double FunctionFamily::partial_sum(Count n, double x) const {
  if (partial_sum_) return partial_sum_(n, x);
  CompensatedSum sum;
  for (Count k = 0; k <= n; ++k) sum += term_(k, x);
  return sum.value();
}

double FunctionFamily::limit(double x) const {
  if (!limit_) throw FamilyError("family '" + name_ + "' has no closed-form limit");
  return limit_(x);
}

double FunctionFamily::term_partial_sum_discrepancy(const std::vector<double>& xs, Count n) const {
  double worst = 0.0;
  for (double x : xs) {
    CompensatedSum sum;
    for (Count k = 0; k <= n; ++k) sum += term(k, x);
    worst = std::max(worst, std::abs(sum.value() - partial_sum(n, x)));
  }
  return worst;
}

namespace {

constexpr double kPi = std::numbers::pi;

double sawtooth_limit(double x) {
  double y = std::fmod(x, 2 * kPi);
  if (y == 0.0) return 0.0;
  if (y < 0) y += 2 * kPi;
  return (kPi - y) / 2;
}

struct Entry {
  BuiltinFamily info;
  std::function<FunctionFamily()> make;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"x_over_n", "f_n(x) = x/n on [0,1]", true},
       [] {
         return FunctionFamily::sequence(
             "x_over_n", [](Count n, double x) { return x / static_cast<double>(std::max<Count>(n, 1)); },
             {0.0, 1.0}, [](double) { return 0.0; });
       }},
      {{"sin_kx_over_k2", "sum_{k>=1} sin(kx)/k^2 on [0,pi]", true},
       [] {
         return FunctionFamily::series(
             "sin_kx_over_k2",
             [](Count n, double x) {
               const double k = static_cast<double>(n + 1);
               return std::sin(k * x) / (k * k);
             },
             {0.0, kPi});
       }},
      {{"exp_series", "sum_{k>=0} x^k/k! on [0,1]", true},
       [] {
         return FunctionFamily::series(
             "exp_series",
             [](Count n, double x) {
               if (x == 0.0) return n == 0 ? 1.0 : 0.0;
               const double k = static_cast<double>(n);
               return std::exp(k * std::log(std::abs(x)) - std::lgamma(k + 1.0)) *
                      ((x < 0 && n % 2 == 1) ? -1.0 : 1.0);
             },
             {0.0, 1.0}, [](double x) { return std::exp(x); });
       }},
      {{"geometric_restricted", "f_n(x) = (1-x)^n on [0.1,1]", true},
       [] {
         return FunctionFamily::sequence(
             "geometric_restricted", [](Count n, double x) { return std::pow(1.0 - x, static_cast<double>(n)); },
             {0.1, 1.0}, [](double x) { return x == 0.0 ? 1.0 : 0.0; });
       }},
      {{"geometric", "f_n(x) = (1-x)^n on [0,1]", false},
       [] {
         return FunctionFamily::sequence(
             "geometric", [](Count n, double x) { return std::pow(1.0 - x, static_cast<double>(n)); },
             {0.0, 1.0}, [](double x) { return x == 0.0 ? 1.0 : 0.0; });
       }},
      {{"arctan", "f_n(x) = arctan(n x) on [-1,1]", false},
       [] {
         auto f = FunctionFamily::sequence(
             "arctan", [](Count n, double x) { return std::atan(static_cast<double>(n) * x); },
             {-1.0, 1.0}, [](double x) { return x > 0 ? kPi / 2 : (x < 0 ? -kPi / 2 : 0.0); });
         f.with_singular_points({0.0});
         return f;
       }},
      {{"sawtooth", "sum_{k>=1} sin(kx)/k on [0,pi], sum (pi-x)/2", false},
       [] {
         return FunctionFamily::series(
             "sawtooth",
             [](Count n, double x) {
               const double k = static_cast<double>(n + 1);
               return std::sin(k * x) / k;
             },
             {0.0, kPi}, sawtooth_limit);
       }},
      {{"x_one_minus_x_series", "sum_{k>=0} x(1-x)^k on [0,1], sum 1 for x>0", false},
       [] {
         return FunctionFamily::series(
             "x_one_minus_x_series",
             [](Count n, double x) { return x * std::pow(1.0 - x, static_cast<double>(n)); }, {0.0, 1.0},
             [](double x) { return x == 0.0 ? 0.0 : 1.0; });
       }},
      {{"bump", "f_n(x) = n x (1-x)^n on [0,1], limit 0", false},
       [] {
         return FunctionFamily::sequence(
             "bump",
             [](Count n, double x) {
               const double k = static_cast<double>(n);
               return k * x * std::pow(1.0 - x, k);
             },
             {0.0, 1.0}, [](double) { return 0.0; });
       }},
  };
  return table;
}

}  // namespace

const std::vector<BuiltinFamily>& builtin_catalog() {
  static const std::vector<BuiltinFamily> catalog = [] {
    std::vector<BuiltinFamily> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

FunctionFamily builtin_family(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.info.name == name) return e.make();
  }
  std::string valid;
  for (const auto& e : entries()) valid += (valid.empty() ? "" : ", ") + e.info.name;
  throw FamilyError("unknown family '" + name + "'; valid families: " + valid);
}

namespace {

FunctionFamily::LimitFn limit_from(const std::optional<std::string>& text) {
  if (!text) return nullptr;
  auto e = Expression::parse(*text);
  if (e.uses_n()) throw FamilyError("the limit must not depend on n");
  return [e](double x) { return e(0.0, x); };
}

}  // namespace

FunctionFamily family_from_term(const std::string& term, Interval domain,
                                const std::optional<std::string>& limit) {
  auto e = Expression::parse(term);
  return FunctionFamily::series(
      term, [e](Count n, double x) { return e(static_cast<double>(n), x); }, domain, limit_from(limit));
}

FunctionFamily family_from_partial_sum(const std::string& partial_sum, Interval domain,
                                       const std::optional<std::string>& limit) {
  auto e = Expression::parse(partial_sum);
  return FunctionFamily::sequence(
      partial_sum, [e](Count n, double x) { return e(static_cast<double>(n), x); }, domain,
      limit_from(limit));
}

}  // namespace hyperlab::conv

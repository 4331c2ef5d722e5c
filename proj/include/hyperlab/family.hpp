#pragma once

// Families of real functions on an interval: either a series given by its
// terms u_n(x), n >= 0, or a sequence given directly by its partial sums
// s_n(x). The limit s(x) is optional; without it remainders are taken against
// a deep partial sum.

#include "hyperlab/expression.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlab::conv {

using Count = long long;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FunctionFamily {
 public:
  using TermFn = std::function<double(Count n, double x)>;
  using LimitFn = std::function<double(double x)>;

  // s_n(x) = sum_{k=0}^{n} term(k, x)
  static FunctionFamily series(std::string name, TermFn term, Interval domain,
                               LimitFn limit = nullptr);
  // s_n(x) given directly
  static FunctionFamily sequence(std::string name, TermFn partial_sum, Interval domain,
                                 LimitFn limit = nullptr);

  const std::string& name() const { return name_; }
  const Interval& domain() const { return domain_; }
  bool has_term() const { return static_cast<bool>(term_); }
  bool has_limit() const { return static_cast<bool>(limit_); }
  const std::vector<double>& singular_points() const { return singular_points_; }

  FunctionFamily& with_domain(Interval domain);
  FunctionFamily& with_singular_points(std::vector<double> points);
  FunctionFamily& with_limit(LimitFn limit);

  // u_n(x); for sequence families u_n = s_n - s_{n-1}.
  double term(Count n, double x) const;
  // s_n(x), compensated summation for series families.
  double partial_sum(Count n, double x) const;
  double limit(double x) const;

  // Checks the invariant partial_sum(n, x) = sum_{k<=n} term(k, x) at the
  // given points; returns the largest absolute discrepancy.
  double term_partial_sum_discrepancy(const std::vector<double>& xs, Count n) const;

 private:
  FunctionFamily() = default;
  void validate() const;

  std::string name_;
  TermFn term_;
  TermFn partial_sum_;
  LimitFn limit_;
  Interval domain_;
  std::vector<double> singular_points_;
};

// The built-in suite, selectable by name.
struct BuiltinFamily {
  std::string name;
  std::string description;
  bool uniform;  // known answer on its default domain
};

const std::vector<BuiltinFamily>& builtin_catalog();
// Throws FamilyError naming the valid families on an unknown name.
FunctionFamily builtin_family(const std::string& name);

// Families from expressions. The limit expression must not use n.
FunctionFamily family_from_term(const std::string& term, Interval domain,
                                const std::optional<std::string>& limit);
FunctionFamily family_from_partial_sum(const std::string& partial_sum, Interval domain,
                                       const std::optional<std::string>& limit);

}  // namespace hyperlab::conv

#pragma once

// Scripted experiments with pass/fail headlines. Every headline carries its
// expected value, tolerance and where the expected value comes from:
//   published - a number printed in the historical sources
//   oracle    - an independent computation done inside the study
//   identity  - an exact algebraic identity
// Reports are deterministic functions of their parameters.

#include "hyperlab/family.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperlab::cases {

using conv::Count;

enum class Provenance { Published, Oracle, Identity };
const char* to_string(Provenance p);

struct Headline {
  std::string name;
  // Numeric headlines set measured/expected/tolerance; categorical ones set
  // the *_text fields and pass on equality.
  std::optional<double> measured;
  std::optional<double> expected;
  std::optional<double> tolerance;
  std::string measured_text;
  std::string expected_text;
  Provenance provenance;
  bool passed;
  std::string note;

  static Headline numeric(std::string name, double measured, double expected, double tolerance,
                          Provenance provenance, std::string note = {});
  static Headline categorical(std::string name, std::string measured, std::string expected,
                              Provenance provenance, std::string note = {});
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// A figure recorded in the historical sources that the computation does not
// reproduce; kept for reference, never used as a pass criterion.
struct HistoricalNote {
  std::string label;
  double printed;
  double computed;
  std::string comment;
};

struct StudyReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Table> tables;
  std::vector<Headline> headlines;
  std::vector<HistoricalNote> historical;

  bool passed() const;
  const Headline& headline(const std::string& name) const;  // throws std::out_of_range
};

class UnknownStudy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sawtooth sum_{k>=1} sin(kx)/k: closed form, jump at 0, the block
// u_n + ... + u_{Mn-1} at x = 1/n for each (n, M), and the infinitesimal test.
StudyReport study_sawtooth(const std::vector<Count>& n_schedule = {100, 1'000, 10'000},
                           const std::vector<Count>& m_list = {100, 1'000, 10'000});

// pi/2 - 1 + 1/(3*3!) - 1/(5*5!) + ... against quadrature of integral_1^inf sin t/t.
// The rational part is exact; pi comes from MPFR at the current precision.
StudyReport study_cauchy_series();

// sum_{k=n+1}^{Mn} sin(k/n)/k as a Riemann sum of integral_1^M sin t/t dt.
StudyReport study_riemann_sum(const std::vector<Count>& n_schedule = {100, 1'000, 10'000},
                              const std::vector<Count>& m_list = {1, 2, 10, 100, 1'000});

// (1-x)^n and arctan(nx): witnesses at x = 1/n, discontinuous limits, and the
// restricted geometric family as the uniform control.
StudyReport study_geometric_and_arctan();

// Incomparable index sequences versus the total order of the field; the
// reciprocal at distinct infinitesimals; sin^2 + cos^2 at hyperreal points.
StudyReport study_order_and_reciprocal();

const std::vector<std::string>& study_names();
// Runs a study with its default parameters. Throws UnknownStudy naming the
// valid studies.
StudyReport run_study(const std::string& name);

}  // namespace hyperlab::cases

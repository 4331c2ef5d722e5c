#pragma once

// Uniform versus pointwise convergence, tested two ways.
//
// check_A is the quantifier form: for each eps find m with sup_x |r_n(x)| < eps
// for all n > m, the sup taken over a uniform grid.
//
// check_B is the infinitesimal form: r_n(x) must be infinitesimal for every
// infinite n and every x of the extended domain. Infinite n is realized by a
// schedule of large indices; infinitesimal inputs x0 + c*n^-p by probes tied
// to that schedule. A probe whose remainder trace does not decay but settles on
// an appreciable value is a witness of non-uniform convergence.
//
// Both are semi-decisions: verdicts carry the grids, schedules and traces
// they were computed from.

#include "hyperlab/family.hpp"
#include "hyperlab/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlab::conv {

class ConvergenceError : public std::domain_error {
 public:
  enum class Kind { DomainViolation, BadIndices, ProbeOutsideDomain, BadArgument };

  ConvergenceError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Depth of the partial sum standing in for s when no closed-form limit exists.
Count surrogate_depth(Count n);

struct RemainderValue {
  double value;
  std::optional<Count> surrogate_depth;  // set when s was replaced by s_N
};

// r_n(x) = s(x) - s_n(x).
RemainderValue remainder(const FunctionFamily& f, Count n, double x);

// u_n(x) + ... + u_{n'-1}(x) = s_{n'-1}(x) - s_{n-1}(x). Requires n' > n.
double cauchy_block(const FunctionFamily& f, Count n, Count n_prime, double x);

// ---------------------------------------------------------------------------
// Quantifier test.

struct AFailure {
  double eps;
  double x;
  Count m;
  double remainder;
};

struct AEpsResult {
  double eps;
  bool success;
  // Smallest N with sup_grid |r_m| < eps for every sampled m in (N, n_max].
  Count minimal_n;
  std::optional<AFailure> failure;
};

struct AVerdict {
  std::vector<AEpsResult> per_eps;
  Count grid_size;
  Count n_max;

  bool uniform() const;
};

AVerdict check_A(const FunctionFamily& f, const std::vector<double>& eps_list, Count grid_size,
                 Count n_max);

// ---------------------------------------------------------------------------
// Infinitesimal test.

struct Probe {
  enum class Kind { StandardPoint, InfinitesimalOffset };

  Kind kind = Kind::StandardPoint;
  double x0 = 0.0;
  double c = 0.0;
  Rational p = 0;
  // Tied probes use the remainder index itself (x = 1/n); untied ones use a
  // fixed index ten times beyond the schedule.
  bool tied = true;

  static Probe standard(double x0);
  static Probe offset(double x0, double c, Rational p, bool tied = true);

  double at(Count n, Count untied_index) const;
  std::string describe() const;
};

struct TracePoint {
  Count n;
  double x;
  double remainder;
  double tol;
  std::optional<Count> surrogate_depth;
};

struct ShadowEstimate {
  double value;
  bool stabilized;
  double convergence_estimate;
};

// Last-two-schedule-points stabilization with a 1/n Richardson step.
ShadowEstimate estimate_shadow(const std::vector<TracePoint>& trace);

struct ProbeEvidence {
  Probe probe;
  std::vector<TracePoint> trace;
  bool negligible;
  bool appreciable;
  ShadowEstimate shadow;
};

struct Witness {
  Probe probe;
  double shadow_estimate;
  Count n_used;
  bool stabilized;
  double convergence_estimate;
};

struct UniformVerdict {
  enum class Mode { Uniform, PointwiseOnly, NotPointwise };

  Mode mode;
  std::optional<Witness> witness;
  std::vector<ProbeEvidence> evidence;
  std::vector<Count> schedule;
  // false when a probe was neither negligible nor appreciable and decided the mode
  bool conclusive = true;
};

const char* to_string(UniformVerdict::Mode mode);

std::vector<Count> default_schedule();
std::vector<Probe> default_probes(const FunctionFamily& f);

UniformVerdict check_B(const FunctionFamily& f, const std::vector<Probe>& probes,
                       const std::vector<Count>& schedule);

// ---------------------------------------------------------------------------
// s(x0 + a) - s(x0) = [s_n(x0 + a) - s_n(x0)] + [r_n(x0 + a) - r_n(x0)], a = n^-p.

enum class Smallness { Negligible, Appreciable, Indeterminate };
const char* to_string(Smallness s);
Smallness smallness(double value, Count n);

struct DecompositionRow {
  Count n;
  double alpha;
  double ds_n;
  double dr_n;
  double ds;
  Smallness ds_n_flag;
  Smallness dr_n_flag;
  Smallness ds_flag;
};

std::vector<DecompositionRow> sum_theorem_decomposition(const FunctionFamily& f, double x0,
                                                        const Rational& p,
                                                        const std::vector<Count>& schedule);

// ---------------------------------------------------------------------------

struct ClassifyOptions {
  std::vector<double> eps_list = {1e-1, 1e-2};
  Count n_max = 1000;
  Count grid_size = 2001;  // spacing (b - a) / (2 n_max)
  std::vector<Count> schedule = default_schedule();
  std::vector<Probe> probes;  // empty: default_probes(f)
};

struct Classification {
  AVerdict verdict_a;
  UniformVerdict verdict_b;
  bool agree;
};

Classification classify_convergence(const FunctionFamily& f, const ClassifyOptions& options = {});

}  // namespace hyperlab::conv

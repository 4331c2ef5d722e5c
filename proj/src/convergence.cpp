#include "hyperlab/convergence.hpp"

#include "hyperlab/sequence_model.hpp"
#include "hyperlab/summation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperlab::conv {

namespace {

void require_in_domain(const FunctionFamily& f, double x) {
  if (!f.domain().contains(x) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "x = " << x << " outside the domain [" << f.domain().lo << ", " << f.domain().hi
        << "] of " << f.name();
    throw ConvergenceError(ConvergenceError::Kind::DomainViolation, msg.str());
  }
}

// sum_{k=from}^{to} u_k(x) for series families; s_to - s_{from-1} otherwise.
double block_sum(const FunctionFamily& f, Count from, Count to, double x) {
  if (to < from) return 0.0;
  if (!f.has_term()) {
    return f.partial_sum(to, x) - (from == 0 ? 0.0 : f.partial_sum(from - 1, x));
  }
  CompensatedSum sum;
  for (Count k = from; k <= to; ++k) sum += f.term(k, x);
  return sum.value();
}

}  // namespace

Count surrogate_depth(Count n) { return std::max(10 * n, n + 10'000); }

RemainderValue remainder(const FunctionFamily& f, Count n, double x) {
  require_in_domain(f, x);
  if (n < 0) throw ConvergenceError(ConvergenceError::Kind::BadIndices, "negative index");
  if (f.has_limit()) return {f.limit(x) - f.partial_sum(n, x), std::nullopt};
  const Count depth = surrogate_depth(n);
  return {block_sum(f, n + 1, depth, x), depth};
}

double cauchy_block(const FunctionFamily& f, Count n, Count n_prime, double x) {
  if (n_prime <= n || n < 0) {
    throw ConvergenceError(ConvergenceError::Kind::BadIndices,
                           "cauchy_block needs 0 <= n < n' (got n = " + std::to_string(n) +
                               ", n' = " + std::to_string(n_prime) + ")");
  }
  require_in_domain(f, x);
  return block_sum(f, n, n_prime - 1, x);
}

// ---------------------------------------------------------------------------

bool AVerdict::uniform() const {
  return std::all_of(per_eps.begin(), per_eps.end(), [](const AEpsResult& r) { return r.success; });
}

AVerdict check_A(const FunctionFamily& f, const std::vector<double>& eps_list, Count grid_size,
                 Count n_max) {
  if (eps_list.empty()) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "eps_list is empty");
  for (double eps : eps_list) {
    if (!(eps > 0)) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "eps must be positive");
  }
  if (grid_size < 2) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "grid needs >= 2 points");
  if (n_max < 1) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "n_max must be >= 1");

  // sup over the grid of |r_m(x)| for m = 1..n_max, with its argmax.
  std::vector<double> sup(static_cast<std::size_t>(n_max + 1), 0.0);
  std::vector<double> arg(static_cast<std::size_t>(n_max + 1), f.domain().lo);
  const Interval& d = f.domain();
  const Count depth = surrogate_depth(n_max);

  for (Count j = 0; j < grid_size; ++j) {
    const double x = (j == grid_size - 1) ? d.hi : d.lo + d.width() * static_cast<double>(j) /
                                                            static_cast<double>(grid_size - 1);
    std::vector<double> partial(static_cast<std::size_t>(n_max + 1));
    double target = 0.0;
    if (f.has_term()) {
      CompensatedSum running;
      const Count last = f.has_limit() ? n_max : depth;
      for (Count k = 0; k <= last; ++k) {
        running += f.term(k, x);
        if (k <= n_max) partial[static_cast<std::size_t>(k)] = running.value();
      }
      target = f.has_limit() ? f.limit(x) : running.value();
    } else {
      for (Count m = 1; m <= n_max; ++m) partial[static_cast<std::size_t>(m)] = f.partial_sum(m, x);
      target = f.has_limit() ? f.limit(x) : f.partial_sum(depth, x);
    }
    for (Count m = 1; m <= n_max; ++m) {
      const auto i = static_cast<std::size_t>(m);
      const double r = std::abs(target - partial[i]);
      if (r > sup[i] || std::isnan(r)) {
        sup[i] = std::isnan(r) ? INFINITY : r;
        arg[i] = x;
      }
    }
  }

  AVerdict verdict{{}, grid_size, n_max};
  for (double eps : eps_list) {
    Count last_failing = 0;
    for (Count m = n_max; m >= 1; --m) {
      if (!(sup[static_cast<std::size_t>(m)] < eps)) {
        last_failing = m;
        break;
      }
    }
    AEpsResult r{eps, last_failing < n_max, last_failing, std::nullopt};
    if (!r.success) {
      const auto i = static_cast<std::size_t>(n_max);
      r.failure = AFailure{eps, arg[i], n_max, sup[i]};
    }
    verdict.per_eps.push_back(r);
  }
  return verdict;
}

// ---------------------------------------------------------------------------

Probe Probe::standard(double x0) { return Probe{Kind::StandardPoint, x0, 0.0, 0, true}; }

Probe Probe::offset(double x0, double c, Rational p, bool tied) {
  if (c == 0.0) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "probe offset c must be nonzero");
  if (p <= 0) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "probe exponent p must be positive");
  return Probe{Kind::InfinitesimalOffset, x0, c, std::move(p), tied};
}

double Probe::at(Count n, Count untied_index) const {
  if (kind == Kind::StandardPoint) return x0;
  const double index = static_cast<double>(tied ? n : untied_index);
  return x0 + c * std::pow(index, -p.convert_to<double>());
}

std::string Probe::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (kind == Kind::StandardPoint) {
    out << "x = " << x0;
    return out.str();
  }
  out << "x = " << x0 << (c < 0 ? " - " : " + ") << std::abs(c) << "*" << (tied ? "n" : "N")
      << "^-" << (denominator(p) == 1 ? p.str() : "(" + p.str() + ")");
  return out.str();
}

ShadowEstimate estimate_shadow(const std::vector<TracePoint>& trace) {
  if (trace.empty()) return {0.0, false, INFINITY};
  const TracePoint& last = trace.back();
  if (trace.size() == 1) return {last.remainder, false, INFINITY};
  const TracePoint& prev = trace[trace.size() - 2];
  const double spread = std::abs(last.remainder - prev.remainder);
  const bool stable = spread < std::max(1e-3, 0.05 * std::abs(last.remainder));
  if (!stable) return {last.remainder, false, spread};
  const double nl = static_cast<double>(last.n);
  const double np = static_cast<double>(prev.n);
  const double richardson = (nl * last.remainder - np * prev.remainder) / (nl - np);
  return {richardson, true, std::max(std::abs(richardson - last.remainder), 1e-12)};
}

const char* to_string(UniformVerdict::Mode mode) {
  switch (mode) {
    case UniformVerdict::Mode::Uniform:
      return "Uniform";
    case UniformVerdict::Mode::PointwiseOnly:
      return "PointwiseOnly";
    case UniformVerdict::Mode::NotPointwise:
      return "NotPointwise";
  }
  return "?";
}

std::vector<Count> default_schedule() { return {1'000, 10'000, 100'000, 1'000'000}; }

std::vector<Probe> default_probes(const FunctionFamily& f) {
  const Interval& d = f.domain();
  std::vector<Probe> probes;
  std::vector<double> standard = {d.lo, 0.5 * (d.lo + d.hi), d.hi};
  for (double s : f.singular_points()) {
    if (d.contains(s)) standard.push_back(s);
  }
  for (double x : standard) {
    const bool seen = std::any_of(probes.begin(), probes.end(), [x](const Probe& p) { return p.x0 == x; });
    if (!seen) probes.push_back(Probe::standard(x));
  }
  if (d.lo == d.hi) return probes;

  // Offsets leave each anchor into the domain; interior singular points are
  // approached from both sides.
  std::vector<std::pair<double, double>> anchors = {{d.lo, 1.0}};
  for (double s : f.singular_points()) {
    if (d.lo < s && s < d.hi) {
      anchors.emplace_back(s, 1.0);
      anchors.emplace_back(s, -1.0);
    }
  }
  anchors.emplace_back(d.hi, -1.0);
  const Rational powers[] = {Rational(1), Rational(1, 2), Rational(2)};
  for (const auto& [x0, c] : anchors) {
    for (const auto& p : powers) probes.push_back(Probe::offset(x0, c, p, true));
  }
  return probes;
}

UniformVerdict check_B(const FunctionFamily& f, const std::vector<Probe>& probes,
                       const std::vector<Count>& schedule) {
  if (probes.empty()) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "no probes");
  if (schedule.size() < 2) {
    throw ConvergenceError(ConvergenceError::Kind::BadArgument, "schedule needs at least two indices");
  }
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) {
      throw ConvergenceError(ConvergenceError::Kind::BadArgument, "schedule must be increasing");
    }
  }
  if (schedule.front() < 1) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "schedule starts below 1");

  const Count untied_index = 10 * schedule.back();
  UniformVerdict verdict{UniformVerdict::Mode::Uniform, std::nullopt, {}, schedule, true};

  for (const Probe& probe : probes) {
    ProbeEvidence ev{probe, {}, false, false, {}};
    for (Count n : schedule) {
      const double x = probe.at(n, untied_index);
      if (!f.domain().contains(x) || !std::isfinite(x)) {
        throw ConvergenceError(ConvergenceError::Kind::ProbeOutsideDomain,
                               "probe " + probe.describe() + " leaves the domain at n = " + std::to_string(n));
      }
      const auto r = remainder(f, n, x);
      ev.trace.push_back({n, x, r.value, seq::default_tolerance(n), r.surrogate_depth});
    }
    // Negligible: below tolerance over the last decade of the schedule.
    const auto& t = ev.trace;
    ev.negligible = std::abs(t[t.size() - 1].remainder) < t[t.size() - 1].tol &&
                    std::abs(t[t.size() - 2].remainder) < t[t.size() - 2].tol;
    ev.shadow = estimate_shadow(t);
    ev.appreciable = !ev.negligible && std::abs(ev.shadow.value) >= seq::kAppreciableFloor;
    verdict.evidence.push_back(std::move(ev));
  }

  auto first = [&](auto pred) -> const ProbeEvidence* {
    for (const auto& ev : verdict.evidence) {
      if (pred(ev)) return &ev;
    }
    return nullptr;
  };
  auto is_standard = [](const ProbeEvidence& ev) { return ev.probe.kind == Probe::Kind::StandardPoint; };

  const ProbeEvidence* w = first([&](const ProbeEvidence& ev) { return is_standard(ev) && ev.appreciable; });
  if (w) {
    verdict.mode = UniformVerdict::Mode::NotPointwise;
  } else if ((w = first([](const ProbeEvidence& ev) { return ev.appreciable; }))) {
    verdict.mode = UniformVerdict::Mode::PointwiseOnly;
  } else if ((w = first([](const ProbeEvidence& ev) { return !ev.negligible; }))) {
    verdict.mode = is_standard(*w) ? UniformVerdict::Mode::NotPointwise : UniformVerdict::Mode::PointwiseOnly;
    verdict.conclusive = false;
  }
  if (w) {
    verdict.witness = Witness{w->probe, w->shadow.value, w->trace.back().n, w->shadow.stabilized,
                              w->shadow.convergence_estimate};
  }
  return verdict;
}

// ---------------------------------------------------------------------------

const char* to_string(Smallness s) {
  switch (s) {
    case Smallness::Negligible:
      return "negligible";
    case Smallness::Appreciable:
      return "appreciable";
    case Smallness::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

Smallness smallness(double value, Count n) {
  const double v = std::abs(value);
  if (v < seq::default_tolerance(n)) return Smallness::Negligible;
  if (v >= seq::kAppreciableFloor) return Smallness::Appreciable;
  return Smallness::Indeterminate;
}

std::vector<DecompositionRow> sum_theorem_decomposition(const FunctionFamily& f, double x0,
                                                        const Rational& p,
                                                        const std::vector<Count>& schedule) {
  if (p <= 0) throw ConvergenceError(ConvergenceError::Kind::BadArgument, "p must be positive");
  require_in_domain(f, x0);
  std::vector<DecompositionRow> rows;
  for (Count n : schedule) {
    if (n < 1) throw ConvergenceError(ConvergenceError::Kind::BadIndices, "schedule index below 1");
    const double alpha = std::pow(static_cast<double>(n), -p.convert_to<double>());
    const double x1 = x0 + alpha;
    require_in_domain(f, x1);

    const double ds_n = f.partial_sum(n, x1) - f.partial_sum(n, x0);
    const double dr_n = remainder(f, n, x1).value - remainder(f, n, x0).value;
    double ds = 0.0;
    if (f.has_limit()) {
      ds = f.limit(x1) - f.limit(x0);
    } else {
      const Count depth = surrogate_depth(n);
      ds = f.partial_sum(depth, x1) - f.partial_sum(depth, x0);
    }
    rows.push_back({n, alpha, ds_n, dr_n, ds, smallness(ds_n, n), smallness(dr_n, n), smallness(ds, n)});
  }
  return rows;
}

Classification classify_convergence(const FunctionFamily& f, const ClassifyOptions& options) {
  auto a = check_A(f, options.eps_list, options.grid_size, options.n_max);
  auto b = check_B(f, options.probes.empty() ? default_probes(f) : options.probes, options.schedule);
  const bool agree = a.uniform() == (b.mode == UniformVerdict::Mode::Uniform);
  return {std::move(a), std::move(b), agree};
}

}  // namespace hyperlab::conv

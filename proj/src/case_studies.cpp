#include "hyperlab/case_studies.hpp"

#include "hyperlab/asymptotic_number.hpp"
#include "hyperlab/convergence.hpp"
#include "hyperlab/field_text.hpp"
#include "hyperlab/quadrature.hpp"
#include "hyperlab/scalar.hpp"
#include "hyperlab/sequence_model.hpp"
#include "hyperlab/summation.hpp"
#include "hyperlab/taylor_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace hyperlab::cases {

using conv::FunctionFamily;
using Json = nlohmann::json;

constexpr double kPi = std::numbers::pi;

// Printed value of integral_1^infinity sin t/t dt in the 1853 memoir.
constexpr double kCauchyPrinted = 0.6244;

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Published:
      return "published";
    case Provenance::Oracle:
      return "oracle";
    case Provenance::Identity:
      return "identity";
  }
  return "?";
}

Headline Headline::numeric(std::string name, double measured, double expected, double tolerance,
                           Provenance provenance, std::string note) {
  Headline h;
  h.name = std::move(name);
  h.measured = measured;
  h.expected = expected;
  h.tolerance = tolerance;
  h.provenance = provenance;
  h.passed = std::abs(measured - expected) <= tolerance;
  h.note = std::move(note);
  return h;
}

Headline Headline::categorical(std::string name, std::string measured, std::string expected,
                               Provenance provenance, std::string note) {
  Headline h;
  h.name = std::move(name);
  h.measured_text = std::move(measured);
  h.expected_text = std::move(expected);
  h.provenance = provenance;
  h.passed = h.measured_text == h.expected_text;
  h.note = std::move(note);
  return h;
}

bool StudyReport::passed() const {
  return std::all_of(headlines.begin(), headlines.end(), [](const Headline& h) { return h.passed; });
}

const Headline& StudyReport::headline(const std::string& wanted) const {
  for (const auto& h : headlines) {
    if (h.name == wanted) return h;
  }
  throw std::out_of_range("study " + name + " has no headline '" + wanted + "'");
}

namespace {

void require_schedule(const std::vector<Count>& values, const char* what) {
  if (values.empty()) throw std::invalid_argument(std::string(what) + " must be nonempty");
  for (Count v : values) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " entries must be >= 1");
  }
}

bool contains(const std::vector<Count>& values, Count v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

// Two largest entries, in increasing order.
std::pair<Count, Count> top_two(std::vector<Count> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2) return {0, 0};
  return {values[values.size() - 2], values.back()};
}

// Extrapolation to 1/n -> 0 from two values of an O(1/n) sequence.
double richardson(Count n1, double v1, Count n2, double v2) {
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  return (b * v2 - a * v1) / (b - a);
}

Json witness_json(const conv::UniformVerdict& v) {
  Json j;
  j["mode"] = conv::to_string(v.mode);
  j["conclusive"] = v.conclusive;
  if (v.witness) {
    j["witness_probe"] = v.witness->probe.describe();
    j["witness_shadow"] = v.witness->shadow_estimate;
    j["n_used"] = v.witness->n_used;
  }
  return j;
}

Table trace_table(const std::string& name, const conv::ProbeEvidence& ev) {
  Table t{name, {"n", "x", "remainder", "tol"}, {}};
  for (const auto& p : ev.trace) t.rows.push_back({static_cast<double>(p.n), p.x, p.remainder, p.tol});
  return t;
}

const conv::ProbeEvidence* witness_evidence(const conv::UniformVerdict& v) {
  if (!v.witness) return nullptr;
  for (const auto& ev : v.evidence) {
    if (ev.probe.describe() == v.witness->probe.describe()) return &ev;
  }
  return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------

StudyReport study_sawtooth(const std::vector<Count>& n_schedule, const std::vector<Count>& m_list) {
  require_schedule(n_schedule, "n_schedule");
  require_schedule(m_list, "M list");
  StudyReport r;
  r.name = "sawtooth";
  r.parameters["n_schedule"] = n_schedule;
  r.parameters["M_list"] = m_list;

  const FunctionFamily f = conv::builtin_family("sawtooth");
  const double sine_integral = quad::sine_integral_from_one().value;

  // Closed form (pi - x)/2 at interior standard points.
  constexpr Count kClosedFormDepth = 100'000;
  r.parameters["closed_form_depth"] = kClosedFormDepth;
  Table closed{"closed_form", {"x", "partial_sum", "closed_form", "error"}, {}};
  double worst = 0.0;
  for (double x : {0.5, 1.0, kPi / 2, 2.0, 2.5}) {
    const double s = f.partial_sum(kClosedFormDepth, x);
    const double exact = (kPi - x) / 2;
    closed.rows.push_back({x, s, exact, s - exact});
    worst = std::max(worst, std::abs(s - exact));
  }
  r.tables.push_back(closed);
  r.headlines.push_back(Headline::numeric("partial sum at pi/2", f.partial_sum(kClosedFormDepth, kPi / 2),
                                          kPi / 4, 1e-4, Provenance::Oracle, "N = 1e5"));
  r.headlines.push_back(
      Headline::numeric("closed form max error", worst, 0.0, 1e-4, Provenance::Oracle, "N = 1e5, 5 interior points"));

  // Jump across 0: s(d) - s(-d) = pi - d, extrapolated to d = 0.
  constexpr Count kJumpDepth = 1'000'000;
  const double d1 = 0.1;
  const double d2 = 0.05;
  const double j1 = f.partial_sum(kJumpDepth, d1) - f.partial_sum(kJumpDepth, -d1);
  const double j2 = f.partial_sum(kJumpDepth, d2) - f.partial_sum(kJumpDepth, -d2);
  const double jump = (d1 * j2 - d2 * j1) / (d1 - d2);
  r.parameters["jump_depth"] = kJumpDepth;
  r.parameters["jump_offsets"] = {d1, d2};
  r.headlines.push_back(Headline::numeric("jump at 0", jump, kPi, 1e-3, Provenance::Published,
                                          "s(0+) - s(0-), linear extrapolation in the offset"));

  // Blocks u_n + ... + u_{Mn-1} at x = 1/n.
  Table blocks{"blocks", {"n", "M", "block", "error"}, {}};
  for (Count m : m_list) {
    for (Count n : n_schedule) {
      const double b = conv::cauchy_block(f, n, m * n, 1.0 / static_cast<double>(n));
      blocks.rows.push_back({static_cast<double>(n), static_cast<double>(m), b, b - sine_integral});
    }
  }
  r.tables.push_back(blocks);
  auto block_at = [&](Count n, Count m) {
    for (const auto& row : blocks.rows) {
      if (row[0] == static_cast<double>(n) && row[1] == static_cast<double>(m)) return row[2];
    }
    throw std::logic_error("missing block");
  };
  const Count n_top = *std::max_element(n_schedule.begin(), n_schedule.end());
  const Count m_top = *std::max_element(m_list.begin(), m_list.end());
  r.headlines.push_back(Headline::numeric("block at largest n and M", block_at(n_top, m_top), sine_integral,
                                          1e-2, Provenance::Oracle,
                                          "n = " + std::to_string(n_top) + ", M = " + std::to_string(m_top)));
  if (const auto [n1, n2] = top_two(n_schedule); n1 > 0) {
    const double extrapolated = richardson(n1, block_at(n1, m_top), n2, block_at(n2, m_top));
    const double finite = quad::sine_integral_between(1.0, static_cast<double>(m_top)).value;
    r.headlines.push_back(Headline::numeric("block extrapolated in n", extrapolated, finite, 1e-6,
                                            Provenance::Oracle, "limit is the integral over [1, M]"));
  }
  r.headlines.push_back(Headline::numeric("block at x = 0", conv::cauchy_block(f, n_top, m_top * n_top, 0.0), 0.0,
                                          0.0, Provenance::Published));

  // Infinitesimal test with the default probes.
  const auto verdict = conv::check_B(f, conv::default_probes(f), conv::default_schedule());
  r.parameters["check_B"] = witness_json(verdict);
  r.parameters["schedule"] = verdict.schedule;
  r.headlines.push_back(Headline::categorical("infinitesimal test", conv::to_string(verdict.mode), "PointwiseOnly",
                                              Provenance::Published));
  if (verdict.witness) {
    r.headlines.push_back(Headline::categorical("witness probe", verdict.witness->probe.describe(),
                                                conv::Probe::offset(0.0, 1.0, 1).describe(), Provenance::Published));
    r.headlines.push_back(Headline::numeric("witness shadow", verdict.witness->shadow_estimate, sine_integral, 1e-3,
                                            Provenance::Oracle));
    if (const auto* ev = witness_evidence(verdict)) r.tables.push_back(trace_table("witness_trace", *ev));
  }

  r.historical.push_back({"integral_1^inf sin t/t dt", kCauchyPrinted, sine_integral,
                          "printed value differs from the quadrature value by about 3e-4"});
  return r;
}

// ---------------------------------------------------------------------------

StudyReport study_cauchy_series() {
  StudyReport r;
  r.name = "cauchy_series";
  constexpr int kTerms = 10;
  constexpr double kCutoff = 1e6;
  r.parameters["terms"] = kTerms;
  r.parameters["quadrature_cutoff"] = kCutoff;
  r.parameters["precision_bits"] = float_precision_bits();

  HighFloat pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  const HighFloat half_pi = pi / 2;

  const auto q = quad::sine_integral_from_one(kCutoff);
  r.parameters["quadrature_error_bound"] = q.error_bound;

  // Term 1 is pi/2, term 2 is -1, term j+2 is (-1)^(j+1) / ((2j+1) (2j+1)!).
  Table partial{"partial_sums", {"terms", "value", "minus_quadrature"}, {}};
  Rational rational_part = 0;
  std::vector<HighFloat> values;
  for (int k = 1; k <= kTerms; ++k) {
    if (k == 2) {
      rational_part -= 1;
    } else if (k > 2) {
      const int j = k - 2;
      const int odd = 2 * j + 1;
      boost::multiprecision::cpp_int factorial = 1;
      for (int i = 2; i <= odd; ++i) factorial *= i;
      const Rational t(boost::multiprecision::cpp_int(1), factorial * odd);
      rational_part += (j % 2 == 1) ? t : Rational(-t);
    }
    values.push_back(half_pi + ScalarTraits<HighFloat>::from_rational(rational_part));
    const double v = values.back().convert_to<double>();
    partial.rows.push_back({static_cast<double>(k), v, v - q.value});
  }
  r.tables.push_back(partial);
  r.parameters["rational_part"] = rational_part.str();
  r.parameters["series_value"] = values.back().str(30, std::ios_base::fixed);

  r.headlines.push_back(Headline::numeric("2 terms", values[1].convert_to<double>(), kPi / 2 - 1, 1e-15,
                                          Provenance::Identity, "pi/2 - 1"));
  r.headlines.push_back(Headline::numeric("4 terms", values[3].convert_to<double>(),
                                          kPi / 2 - 1 + 1.0 / 18 - 1.0 / 600, 1e-15, Provenance::Identity,
                                          "pi/2 - 1 + 1/18 - 1/600"));
  r.headlines.push_back(Headline::numeric("4 terms printed digits", values[3].convert_to<double>(), 0.624685, 1e-6,
                                          Provenance::Oracle));
  r.headlines.push_back(Headline::numeric("10 terms vs quadrature", values.back().convert_to<double>(), q.value,
                                          1e-9, Provenance::Oracle));
  r.headlines.push_back(
      Headline::numeric("quadrature value", q.value, 0.6247132, 1e-7, Provenance::Oracle, "7 printed digits"));

  r.historical.push_back({"alternating series total", kCauchyPrinted, values.back().convert_to<double>(),
                          "printed value differs from the series value by about 3e-4"});
  return r;
}

// ---------------------------------------------------------------------------

StudyReport study_riemann_sum(const std::vector<Count>& n_schedule, const std::vector<Count>& m_list) {
  require_schedule(n_schedule, "n_schedule");
  require_schedule(m_list, "M list");
  StudyReport r;
  r.name = "riemann_sum";
  r.parameters["n_schedule"] = n_schedule;
  r.parameters["M_list"] = m_list;

  const double infinite = quad::sine_integral_from_one().value;

  // sum_{k=n+1}^{Mn} sin(t_k)/t_k * dt with t_k = k/n, dt = 1/n.
  auto riemann = [](Count n, Count m) {
    const double dt = 1.0 / static_cast<double>(n);
    CompensatedSum s;
    for (Count k = n + 1; k <= m * n; ++k) {
      const double t = static_cast<double>(k) * dt;
      s += std::sin(t) / t * dt;
    }
    return s.value();
  };

  Table table{"riemann_sums", {"n", "M", "sum", "integral", "error", "n_times_error"}, {}};
  std::map<std::pair<Count, Count>, double> sums;
  std::map<Count, double> integrals;
  for (Count m : m_list) {
    integrals[m] = m == 1 ? 0.0 : quad::sine_integral_between(1.0, static_cast<double>(m)).value;
    for (Count n : n_schedule) {
      const double s = riemann(n, m);
      sums[{n, m}] = s;
      const double err = s - integrals[m];
      table.rows.push_back({static_cast<double>(n), static_cast<double>(m), s, integrals[m], err,
                            err * static_cast<double>(n)});
    }
  }
  r.tables.push_back(table);

  // Same sum in Cauchy's form sin(k x)/k at x = 1/n.
  {
    const Count n = *std::min_element(n_schedule.begin(), n_schedule.end());
    const Count m = *std::max_element(m_list.begin(), m_list.end());
    const auto f = conv::builtin_family("sawtooth");
    const double block = m > 1 ? conv::cauchy_block(f, n, m * n, 1.0 / static_cast<double>(n)) : 0.0;
    r.headlines.push_back(Headline::numeric("Riemann form equals block", sums[{n, m}], block, 1e-12,
                                            Provenance::Identity));
  }

  if (contains(n_schedule, 10'000) && contains(m_list, 2)) {
    r.headlines.push_back(Headline::numeric("M = 2, n = 1e4", sums[{10'000, 2}], integrals[2], 1e-3,
                                            Provenance::Oracle, "integral over [1, 2]"));
  }
  if (contains(m_list, 1)) {
    const Count n = n_schedule.front();
    r.headlines.push_back(Headline::numeric("M = 1 empty sum", sums[{n, 1}], 0.0, 0.0, Provenance::Identity));
  }
  if (contains(n_schedule, 1'000) && contains(m_list, 1'000)) {
    r.headlines.push_back(Headline::numeric("M = 1e3, n = 1e3", sums[{1'000, 1'000}], infinite, 2e-3,
                                            Provenance::Oracle, "tail beyond M bounded by 2/M"));
  }
  const Count m_top = *std::max_element(m_list.begin(), m_list.end());
  if (const auto [n1, n2] = top_two(n_schedule); n1 > 0 && m_top > 1) {
    const double extrapolated = richardson(n1, sums[{n1, m_top}], n2, sums[{n2, m_top}]);
    r.parameters["extrapolated"] = extrapolated;
    r.headlines.push_back(Headline::numeric("extrapolated in n", extrapolated, integrals[m_top], 1e-6,
                                            Provenance::Oracle, "M = " + std::to_string(m_top)));
    r.headlines.push_back(Headline::numeric("extrapolated vs infinite integral", extrapolated, infinite,
                                            2.0 / static_cast<double>(m_top), Provenance::Oracle,
                                            "budget 2/M"));
  }
  return r;
}

// ---------------------------------------------------------------------------

StudyReport study_geometric_and_arctan() {
  StudyReport r;
  r.name = "geometric_and_arctan";
  const double inv_e = std::exp(-1.0);

  constexpr double kN = 1e6;
  r.headlines.push_back(Headline::numeric("(1-1/n)^n at n = 1e6", std::pow(1.0 - 1.0 / kN, kN), inv_e, 1e-6,
                                          Provenance::Published));

  const conv::ClassifyOptions options;
  r.parameters["eps_list"] = options.eps_list;
  r.parameters["n_max"] = options.n_max;
  r.parameters["grid_size"] = options.grid_size;
  r.parameters["schedule"] = options.schedule;

  Table a_table{"quantifier_test", {"family", "eps", "success", "minimal_n"}, {}};
  const std::string tied_probe = conv::Probe::offset(0.0, 1.0, 1).describe();

  auto run = [&](const std::string& name, int index) {
    const auto f = conv::builtin_family(name);
    auto c = conv::classify_convergence(f, options);
    for (const auto& e : c.verdict_a.per_eps) {
      a_table.rows.push_back({static_cast<double>(index), e.eps, e.success ? 1.0 : 0.0,
                              static_cast<double>(e.minimal_n)});
    }
    Json j = witness_json(c.verdict_b);
    j["quantifier_uniform"] = c.verdict_a.uniform();
    j["agree"] = c.agree;
    r.parameters["families"][name] = j;
    r.headlines.push_back(
        Headline::categorical(name + " tests agree", c.agree ? "true" : "false", "true", Provenance::Published));
    if (const auto* ev = witness_evidence(c.verdict_b)) r.tables.push_back(trace_table(name + "_witness_trace", *ev));
    return c;
  };

  const auto geometric = run("geometric", 0);
  r.headlines.push_back(Headline::categorical("geometric mode", conv::to_string(geometric.verdict_b.mode),
                                              "PointwiseOnly", Provenance::Published));
  if (geometric.verdict_b.witness) {
    const auto& w = *geometric.verdict_b.witness;
    r.headlines.push_back(
        Headline::categorical("geometric witness probe", w.probe.describe(), tied_probe, Provenance::Published));
    r.headlines.push_back(Headline::numeric("geometric witness |shadow|", std::abs(w.shadow_estimate), inv_e, 1e-3,
                                            Provenance::Published, "remainder s - s_n is -(1-1/n)^n"));
  }

  const auto arctan = run("arctan", 1);
  r.headlines.push_back(Headline::categorical("arctan mode", conv::to_string(arctan.verdict_b.mode),
                                              "PointwiseOnly", Provenance::Published));
  if (arctan.verdict_b.witness) {
    const auto& w = *arctan.verdict_b.witness;
    r.headlines.push_back(
        Headline::categorical("arctan witness probe", w.probe.describe(), tied_probe, Provenance::Identity));
    r.headlines.push_back(
        Headline::numeric("arctan witness shadow", w.shadow_estimate, kPi / 4, 1e-6, Provenance::Identity,
                          "pi/2 - arctan 1"));
  }

  const auto restricted = run("geometric_restricted", 2);
  r.headlines.push_back(Headline::categorical("restricted geometric mode",
                                              conv::to_string(restricted.verdict_b.mode), "Uniform",
                                              Provenance::Oracle, "sup bound 0.9^n"));
  r.tables.push_back(a_table);

  // Limits are discontinuous at 0, seen through the families at a large index.
  constexpr Count kLarge = 1'000'000;
  const double h = 1e-2;
  const auto g = conv::builtin_family("geometric");
  const auto at = conv::builtin_family("arctan");
  r.headlines.push_back(Headline::numeric("geometric jump at 0", g.partial_sum(kLarge, 0.0) - g.partial_sum(kLarge, h),
                                          1.0, 1e-6, Provenance::Oracle, "f(0) - f(0.01) at n = 1e6"));
  r.headlines.push_back(Headline::numeric("arctan jump at 0", at.partial_sum(kLarge, h) - at.partial_sum(kLarge, -h),
                                          kPi, 1e-3, Provenance::Oracle, "f(0.01) - f(-0.01) at n = 1e6"));
  return r;
}

// ---------------------------------------------------------------------------

StudyReport study_order_and_reciprocal() {
  StudyReport r;
  r.name = "order_and_reciprocal";

  // Index sequences k and k + (-1)^k.
  const seq::HyperSeq n = seq::HyperSeq::identity();
  const seq::HyperSeq n_prime([](seq::Index k) { return static_cast<double>(k + (k % 2 == 0 ? 1 : -1)); },
                              "k + (-1)^k");
  const seq::EvalWindow window;
  r.parameters["window"] = {{"start", window.start}, {"length", window.length}};
  const auto cmp = seq::compare_indices(n, n_prime, window);
  r.headlines.push_back(Headline::categorical("index comparison", seq::to_string(cmp.kind), "Incomparable",
                                              Provenance::Published));
  Table signs{"index_signs", {"k", "n", "n_prime", "sign"}, {}};
  for (seq::Index k = window.start; k < window.start + 10; ++k) {
    const double d = n_prime(k) - n(k);
    signs.rows.push_back({static_cast<double>(k), n(k), n_prime(k), static_cast<double>((d > 0) - (d < 0))});
  }
  r.tables.push_back(signs);

  using A = RationalAsymptotic;
  const A e = A::epsilon();
  const A inv_e = inv(e);
  const A inv_e2 = inv(e * e);
  r.headlines.push_back(Headline::categorical("compare(1/e + 1, 1/e)", to_string(compare(inv_e + A(1), inv_e).kind),
                                              "Greater", Provenance::Identity));
  r.headlines.push_back(Headline::categorical("compare(e, e^2)", to_string(compare(e, e * e).kind), "Greater",
                                              Provenance::Identity));
  r.headlines.push_back(
      Headline::categorical("classify(inv e)", to_string(classify(inv_e)), "Unlimited", Provenance::Identity));
  const A diff = inv_e - inv_e2;
  r.parameters["reciprocal_difference"] = render(diff);
  r.headlines.push_back(Headline::categorical("classify(inv e - inv e^2)", to_string(classify(diff)), "Unlimited",
                                              Provenance::Identity, "e and e^2 are infinitely close"));

  // sin^2 + cos^2 at 1/2 + e through the floating path.
  constexpr int kOrder = 6;
  r.parameters["transfer_order"] = kOrder;
  r.parameters["precision_bits"] = float_precision_bits();
  {
    using F = FloatAsymptotic;
    const HighFloat center = HighFloat(1) / 2;
    const F a = F(center) + F::epsilon();
    const auto s = compose_analytic(taylor::sin(center, kOrder + 1), a, Rational(kOrder));
    const auto c = compose_analytic(taylor::cos(center, kOrder + 1), a, Rational(kOrder));
    const F one = s * s + c * c;
    HighFloat worst = 0;
    for (const auto& [q, coef] : one.terms()) {
      if (q != 0) worst = std::max(worst, HighFloat(abs(coef)));
    }
    const double roundoff = 64 * ScalarTraits<HighFloat>::unit_roundoff(center).convert_to<double>();
    r.headlines.push_back(Headline::numeric("sin^2+cos^2 constant at 1/2 + e",
                                            one.coefficient(Rational(0)).convert_to<double>(), 1.0, roundoff,
                                            Provenance::Published));
    r.headlines.push_back(Headline::numeric("sin^2+cos^2 non-constant coefficients at 1/2 + e",
                                            worst.convert_to<double>(), 0.0, roundoff, Provenance::Published));
  }
  // Exact path at a rational center where sin and cos are rational.
  {
    const A a = e * A(Rational(3)) - e * e;
    const auto s = compose_analytic(taylor::sin(Rational(0), kOrder + 1), a, Rational(kOrder));
    const auto c = compose_analytic(taylor::cos(Rational(0), kOrder + 1), a, Rational(kOrder));
    const A one = s * s + c * c;
    r.parameters["exact_transfer"] = render(one);
    r.headlines.push_back(Headline::numeric("sin^2+cos^2 exact terms beyond the constant",
                                            static_cast<double>(one.terms().size() - (one.coefficient(0) != 0)), 0.0,
                                            0.0, Provenance::Published, "3e - e^2, exact rational path"));
    r.headlines.push_back(Headline::numeric("sin^2+cos^2 exact constant",
                                            one.coefficient(Rational(0)).convert_to<double>(), 1.0, 0.0,
                                            Provenance::Published));
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::pair<std::string, std::function<StudyReport()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<StudyReport()>>> table = {
      {"sawtooth", [] { return study_sawtooth(); }},
      {"cauchy_series", [] { return study_cauchy_series(); }},
      {"riemann_sum", [] { return study_riemann_sum(); }},
      {"geometric_and_arctan", [] { return study_geometric_and_arctan(); }},
      {"order_and_reciprocal", [] { return study_order_and_reciprocal(); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& study_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

StudyReport run_study(const std::string& name) {
  for (const auto& [candidate, run] : registry()) {
    if (candidate == name) return run();
  }
  std::string valid;
  for (const auto& n : study_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw UnknownStudy("unknown study '" + name + "'; valid studies: " + valid);
}

}  // namespace hyperlab::cases

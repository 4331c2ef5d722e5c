#include "cli.hpp"

#include "hyperlab/case_studies.hpp"
#include "hyperlab/convergence.hpp"
#include "hyperlab/expression.hpp"
#include "hyperlab/field_text.hpp"
#include "hyperlab/report.hpp"
#include "hyperlab/scalar.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hyperlab::cli {

namespace {

namespace fs = std::filesystem;
using conv::Count;

// A failure that maps directly to an exit code.
struct ExitError {
  int code;
  std::string message;
};

constexpr const char* kGrammarHelp = R"help(
Field expressions (field eval):
  rationals 3, 1/2, 0.25; e for the infinitesimal generator; + - * /;
  ^ with an integer power, or a rational power of e alone: e^(1/2);
  parentheses; O(e^q) marks every exponent above q as unknown.
  Example: 1/(1-e) + O(e^3)

Family expressions (--term, --partial-sum, --limit):
  numbers, n, x, pi; + - * / ^; sin cos tan arctan exp log sqrt abs sign.
  --term gives u_n(x), n >= 0, summed as a series; --partial-sum gives s_n(x).
  Example: --term "sin((n+1)*x)/(n+1)"

Probes (--probes):
  pt:X               the standard point X
  inf:X0:C:P         X0 + C*n^-P at the remainder index n (P may be a fraction)
  inf:X0:C:P:untied  X0 + C*N^-P at a fixed N beyond the schedule

Exit codes: 0 success, 1 a case-study headline failed, 2 usage or
specification error, 3 mathematical domain error, 4 I/O error.
)help";

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ExitError{kIo, "cannot open " + path.string() + " for writing"};
  file << content;
  file.close();
  if (!file) throw ExitError{kIo, "failed writing " + path.string()};
}

void emit(const std::optional<std::string>& out_path, const std::string& content, std::ostream& out) {
  if (out_path) {
    write_file(*out_path, content);
  } else {
    out << content;
  }
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw ExitError{kIo, "cannot create directory " + dir.string()};
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    return parse_constant(text);
  } catch (const ParseError& e) {
    throw ExitError{kUsage, what + ": " + annotate(text, e)};
  }
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    const auto a = parse_field_expression(text);
    if (!a.is_exact() || a.terms().size() > 1 || (a.terms().size() == 1 && a.terms().begin()->first != 0)) {
      throw ExitError{kUsage, what + ": expected a rational number, got '" + text + "'"};
    }
    return a.coefficient(Rational(0));
  } catch (const ParseError& e) {
    throw ExitError{kUsage, what + ": " + annotate(text, e)};
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

conv::Probe parse_probe(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 2 && parts[0] == "pt") return conv::Probe::standard(parse_number(parts[1], "probe " + text));
  if ((parts.size() == 4 || parts.size() == 5) && parts[0] == "inf") {
    bool tied = true;
    if (parts.size() == 5) {
      if (parts[4] != "untied") throw ExitError{kUsage, "probe " + text + ": fifth field must be 'untied'"};
      tied = false;
    }
    const double x0 = parse_number(parts[1], "probe " + text);
    const double c = parse_number(parts[2], "probe " + text);
    const Rational p = parse_rational(parts[3], "probe " + text);
    try {
      return conv::Probe::offset(x0, c, p, tied);
    } catch (const conv::ConvergenceError& e) {
      throw ExitError{kUsage, "probe " + text + ": " + e.what()};
    }
  }
  throw ExitError{kUsage, "malformed probe '" + text + "' (expected pt:X or inf:X0:C:P[:untied])"};
}

std::vector<Count> parse_schedule(const std::vector<std::string>& items) {
  std::vector<Count> schedule;
  for (const auto& item : items) {
    for (const auto& piece : split(item, ',')) {
      const double v = parse_number(piece, "schedule");
      if (!(v >= 1) || v != std::floor(v) || v > 1e12) {
        throw ExitError{kUsage, "schedule entries must be integers in [1, 1e12], got '" + piece + "'"};
      }
      schedule.push_back(static_cast<Count>(v));
    }
  }
  if (schedule.size() < 2) throw ExitError{kUsage, "schedule needs at least two indices"};
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) throw ExitError{kUsage, "schedule must be strictly increasing"};
  }
  return schedule;
}

void apply_precision(std::optional<unsigned> bits) {
  if (!bits) return;
  try {
    set_float_precision_bits(*bits);
  } catch (const std::invalid_argument& e) {
    throw ExitError{kUsage, e.what()};
  }
}

void require_format(const std::string& format) {
  if (format != "json" && format != "text" && format != "csv") {
    throw ExitError{kUsage, "unknown format '" + format + "' (json, text or csv)"};
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct CheckConfig {
  std::optional<std::string> family;
  std::optional<std::string> term;
  std::optional<std::string> partial_sum;
  std::optional<std::string> limit;
  std::vector<std::string> domain;
  std::vector<std::string> probes;
  std::vector<std::string> schedule;
  std::string format = "text";
  std::optional<std::string> out;
  std::optional<unsigned> precision;
};

conv::FunctionFamily build_family(const CheckConfig& cfg) {
  const int given = cfg.family.has_value() + cfg.term.has_value() + cfg.partial_sum.has_value();
  if (given != 1) throw ExitError{kUsage, "give exactly one of --family, --term, --partial-sum"};
  std::optional<conv::Interval> domain;
  if (!cfg.domain.empty()) {
    domain = conv::Interval{parse_number(cfg.domain[0], "--domain"), parse_number(cfg.domain[1], "--domain")};
  }
  for (const auto* text : {&cfg.term, &cfg.partial_sum, &cfg.limit}) {
    if (!*text) continue;
    try {
      Expression::parse(**text);
    } catch (const ParseError& e) {
      throw ExitError{kUsage, annotate(**text, e)};
    }
  }
  try {
    if (cfg.family) {
      auto f = conv::builtin_family(*cfg.family);
      if (domain) f.with_domain(*domain);
      if (cfg.limit) {
        const auto e = Expression::parse(*cfg.limit);
        if (e.uses_n()) throw ExitError{kUsage, "the limit must not depend on n"};
        f.with_limit([e](double x) { return e(0.0, x); });
      }
      return f;
    }
    if (!domain) throw ExitError{kUsage, "--domain a b is required with --term and --partial-sum"};
    return cfg.term ? conv::family_from_term(*cfg.term, *domain, cfg.limit)
                    : conv::family_from_partial_sum(*cfg.partial_sum, *domain, cfg.limit);
  } catch (const conv::FamilyError& e) {
    throw ExitError{kUsage, e.what()};
  }
}

int cmd_check(const CheckConfig& cfg, std::ostream& out) {
  require_format(cfg.format);
  apply_precision(cfg.precision);
  const auto f = build_family(cfg);
  conv::ClassifyOptions options;
  if (!cfg.schedule.empty()) options.schedule = parse_schedule(cfg.schedule);
  for (const auto& p : cfg.probes) {
    for (const auto& piece : split(p, ',')) options.probes.push_back(parse_probe(piece));
  }
  conv::Classification c;
  try {
    c = conv::classify_convergence(f, options);
  } catch (const conv::ConvergenceError& e) {
    using K = conv::ConvergenceError::Kind;
    throw ExitError{e.kind() == K::DomainViolation ? kMathDomain : kUsage, e.what()};
  }
  std::string text;
  if (cfg.format == "json") {
    text = dump(report::to_json(c, f));
  } else if (cfg.format == "csv") {
    text = report::to_csv(c.verdict_b);
  } else {
    text = report::to_text(c, f);
  }
  emit(cfg.out, text, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct CasesConfig {
  std::string format = "json";
  std::optional<std::string> out;
  std::vector<std::string> only;
  std::optional<unsigned> precision;
};

int cmd_cases(const CasesConfig& cfg, std::ostream& out) {
  require_format(cfg.format);
  apply_precision(cfg.precision);
  std::vector<std::string> names = cfg.only.empty() ? cases::study_names() : cfg.only;
  for (const auto& name : names) {
    const auto& valid = cases::study_names();
    if (std::find(valid.begin(), valid.end(), name) == valid.end()) {
      std::string list;
      for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
      throw ExitError{kUsage, "unknown study '" + name + "'; valid studies: " + list};
    }
  }
  if (cfg.out) ensure_directory(*cfg.out);

  std::vector<cases::StudyReport> reports;
  for (const auto& name : names) reports.push_back(cases::run_study(name));

  nlohmann::json summary;
  summary["schema"] = report::kSchemaVersion;
  summary["studies"] = nlohmann::json::array();
  bool all_passed = true;
  for (const auto& r : reports) {
    nlohmann::json failed = nlohmann::json::array();
    for (const auto& h : r.headlines) {
      if (!h.passed) failed.push_back(h.name);
    }
    summary["studies"].push_back(
        {{"study", r.name}, {"passed", r.passed()}, {"headlines", r.headlines.size()}, {"failed", failed}});
    all_passed = all_passed && r.passed();
  }
  summary["passed"] = all_passed;

  if (cfg.out) {
    const fs::path dir(*cfg.out);
    for (const auto& r : reports) {
      if (cfg.format == "json") {
        write_file(dir / (r.name + ".json"), dump(report::to_json(r)));
      } else if (cfg.format == "text") {
        write_file(dir / (r.name + ".txt"), report::to_text(r));
      } else {
        for (const auto& t : r.tables) {
          write_file(dir / (r.name + "_" + t.name + ".csv"), report::to_csv(t));
          write_file(dir / (r.name + "_" + t.name + ".dat"), report::to_gnuplot(t));
        }
      }
    }
    write_file(dir / (cfg.format == "text" ? "summary.txt" : "summary.json"),
               cfg.format == "text" ? std::string(all_passed ? "all studies pass\n" : "some studies FAIL\n")
                                    : dump(summary));
  } else if (cfg.format == "json") {
    nlohmann::json all = summary;
    all["reports"] = nlohmann::json::array();
    for (const auto& r : reports) all["reports"].push_back(report::to_json(r));
    out << dump(all);
  } else if (cfg.format == "text") {
    for (const auto& r : reports) out << report::to_text(r) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& t : r.tables) out << "# " << r.name << " " << t.name << "\n" << report::to_csv(t);
    }
  }
  return all_passed ? kOk : kHeadlineFailed;
}

int cmd_field_eval(const std::string& expr, std::ostream& out) {
  try {
    out << render(parse_field_expression(expr)) << "\n";
  } catch (const ParseError& e) {
    throw ExitError{kUsage, annotate(expr, e)};
  } catch (const FieldError& e) {
    throw ExitError{kMathDomain, e.what()};
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infinitesimal arithmetic and uniform-convergence laboratory", "hyperlab"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);

  auto* field = app.add_subcommand("field", "Asymptotic-field arithmetic");
  field->require_subcommand(1);
  auto* eval = field->add_subcommand("eval", "Evaluate and normalize a field expression");
  std::string expr;
  eval->add_option("expr", expr, "Field expression, e.g. \"(1+e)*(1-e)\"")->required();

  CheckConfig check_cfg;
  auto* check = app.add_subcommand("check", "Classify convergence of a function family");
  check->add_option("--family", check_cfg.family, "Built-in family name");
  check->add_option("--term", check_cfg.term, "Series term u_n(x), n >= 0");
  check->add_option("--partial-sum", check_cfg.partial_sum, "Partial sum s_n(x)");
  check->add_option("--limit", check_cfg.limit, "Closed-form limit s(x)");
  check->add_option("--domain", check_cfg.domain, "Interval endpoints a b")->expected(2);
  check->add_option("--probes", check_cfg.probes, "Probes replacing the defaults")->expected(1, -1);
  check->add_option("--schedule", check_cfg.schedule, "Increasing remainder indices")->expected(1, -1);
  check->add_option("--format", check_cfg.format, "json, text or csv")->capture_default_str();
  check->add_option("--out", check_cfg.out, "Output file (default stdout)");
  check->add_option("--precision", check_cfg.precision, "Float precision in bits (>= 64)");

  CasesConfig cases_cfg;
  auto* cases_cmd = app.add_subcommand("cases", "Run the case-study suite");
  cases_cmd->add_option("--format", cases_cfg.format, "json, text or csv")->capture_default_str();
  cases_cmd->add_option("--out", cases_cfg.out, "Output directory (default stdout)");
  cases_cmd->add_option("--only", cases_cfg.only, "Run only these studies")->expected(1, -1);
  cases_cmd->add_option("--precision", cases_cfg.precision, "Float precision in bits (>= 64)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*eval) return cmd_field_eval(expr, out);
    if (*check) return cmd_check(check_cfg, out);
    if (*cases_cmd) return cmd_cases(cases_cfg, out);
  } catch (const ExitError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kMathDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kMathDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hyperlab::cli

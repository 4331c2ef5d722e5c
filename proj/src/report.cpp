#include "hyperlab/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hyperlab::report {

using Json = nlohmann::json;

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

namespace {

Json headline_json(const cases::Headline& h) {
  Json j;
  j["name"] = h.name;
  if (h.measured) {
    j["measured"] = *h.measured;
    j["expected"] = *h.expected;
    j["tolerance"] = *h.tolerance;
  } else {
    j["measured"] = h.measured_text;
    j["expected"] = h.expected_text;
  }
  j["provenance"] = cases::to_string(h.provenance);
  j["passed"] = h.passed;
  if (!h.note.empty()) j["note"] = h.note;
  return j;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

Json to_json(const cases::StudyReport& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["study"] = report.name;
  j["passed"] = report.passed();
  j["parameters"] = report.parameters;
  j["headlines"] = Json::array();
  for (const auto& h : report.headlines) j["headlines"].push_back(headline_json(h));
  j["tables"] = Json::array();
  for (const auto& t : report.tables) {
    j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  }
  j["historical"] = Json::array();
  for (const auto& n : report.historical) {
    j["historical"].push_back({{"label", n.label},
                               {"printed", n.printed},
                               {"computed", n.computed},
                               {"difference", n.computed - n.printed},
                               {"comment", n.comment}});
  }
  return j;
}

std::string to_text(const cases::StudyReport& report) {
  std::vector<std::array<std::string, 6>> rows = {{"headline", "measured", "expected", "tolerance", "source", "result"}};
  for (const auto& h : report.headlines) {
    if (h.measured) {
      rows.push_back({h.name, format_number(*h.measured), format_number(*h.expected), format_number(*h.tolerance),
                      cases::to_string(h.provenance), h.passed ? "pass" : "FAIL"});
    } else {
      rows.push_back({h.name, h.measured_text, h.expected_text, "-", cases::to_string(h.provenance),
                      h.passed ? "pass" : "FAIL"});
    }
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << "study " << report.name << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& row : rows) {
    out << " ";
    for (std::size_t i = 0; i < row.size(); ++i) out << " " << (i + 1 < row.size() ? pad(row[i], width[i]) : row[i]);
    out << "\n";
  }
  for (const auto& n : report.historical) {
    out << "  historical: " << n.label << " printed " << format_number(n.printed) << ", computed "
        << format_number(n.computed) << " (" << n.comment << ")\n";
  }
  return out.str();
}

std::string to_csv(const cases::Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string to_gnuplot(const cases::Table& table) {
  std::ostringstream out;
  out << "#";
  for (const auto& c : table.columns) out << " " << c;
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << format_number(row[i]);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Json to_json(const conv::Classification& c, const conv::FunctionFamily& f) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = f.name();
  j["domain"] = {f.domain().lo, f.domain().hi};
  j["agree"] = c.agree;

  Json a;
  a["uniform"] = c.verdict_a.uniform();
  a["grid_size"] = c.verdict_a.grid_size;
  a["n_max"] = c.verdict_a.n_max;
  a["per_eps"] = Json::array();
  for (const auto& e : c.verdict_a.per_eps) {
    Json r = {{"eps", e.eps}, {"success", e.success}, {"minimal_n", e.minimal_n}};
    if (e.failure) r["failure"] = {{"x", e.failure->x}, {"m", e.failure->m}, {"remainder", e.failure->remainder}};
    a["per_eps"].push_back(r);
  }
  j["quantifier_test"] = a;

  const auto& v = c.verdict_b;
  Json b;
  b["mode"] = conv::to_string(v.mode);
  b["conclusive"] = v.conclusive;
  b["schedule"] = v.schedule;
  if (v.witness) {
    b["witness"] = {{"probe", v.witness->probe.describe()},
                    {"shadow_estimate", v.witness->shadow_estimate},
                    {"n_used", v.witness->n_used},
                    {"stabilized", v.witness->stabilized},
                    {"convergence_estimate", v.witness->convergence_estimate}};
  }
  b["probes"] = Json::array();
  for (const auto& ev : v.evidence) {
    Json p = {{"probe", ev.probe.describe()},
              {"negligible", ev.negligible},
              {"appreciable", ev.appreciable},
              {"shadow_estimate", ev.shadow.value},
              {"stabilized", ev.shadow.stabilized}};
    p["trace"] = Json::array();
    for (const auto& t : ev.trace) {
      Json tp = {{"n", t.n}, {"x", t.x}, {"remainder", t.remainder}, {"tol", t.tol}};
      if (t.surrogate_depth) tp["surrogate_depth"] = *t.surrogate_depth;
      p["trace"].push_back(tp);
    }
    b["probes"].push_back(p);
  }
  j["infinitesimal_test"] = b;
  return j;
}

std::string to_text(const conv::Classification& c, const conv::FunctionFamily& f) {
  std::ostringstream out;
  out << "family " << f.name() << " on [" << format_number(f.domain().lo) << ", " << format_number(f.domain().hi)
      << "]\n";
  out << "quantifier test: " << (c.verdict_a.uniform() ? "uniform" : "not uniform") << " (grid "
      << c.verdict_a.grid_size << ", n_max " << c.verdict_a.n_max << ")\n";
  for (const auto& e : c.verdict_a.per_eps) {
    out << "  eps " << format_number(e.eps) << ": ";
    if (e.success) {
      out << "N = " << e.minimal_n << "\n";
    } else {
      out << "fails at x = " << format_number(e.failure->x) << ", m = " << e.failure->m
          << ", |r| = " << format_number(e.failure->remainder) << "\n";
    }
  }
  const auto& v = c.verdict_b;
  out << "infinitesimal test: " << conv::to_string(v.mode) << (v.conclusive ? "" : " (inconclusive)") << "\n";
  if (v.witness) {
    out << "  witness " << v.witness->probe.describe() << ", shadow " << format_number(v.witness->shadow_estimate)
        << " at n = " << v.witness->n_used << "\n";
  }
  out << "tests agree: " << (c.agree ? "yes" : "no") << "\n";
  return out.str();
}

std::string to_csv(const conv::UniformVerdict& verdict) {
  std::ostringstream out;
  out << "probe,n,x,remainder,tol,negligible\n";
  for (const auto& ev : verdict.evidence) {
    for (const auto& t : ev.trace) {
      out << ev.probe.describe() << "," << t.n << "," << format_number(t.x) << "," << format_number(t.remainder)
          << "," << format_number(t.tol) << "," << (std::abs(t.remainder) < t.tol ? 1 : 0) << "\n";
    }
  }
  return out.str();
}

}  // namespace hyperlab::report

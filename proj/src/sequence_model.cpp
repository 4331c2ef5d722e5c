#include "hyperlab/sequence_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperlab::seq {

HyperSeq HyperSeq::constant(double value) {
  return HyperSeq([value](Index) { return value; }, std::to_string(value));
}

HyperSeq HyperSeq::identity() {
  return HyperSeq([](Index k) { return static_cast<double>(k); }, "k");
}

HyperSeq seq_arith(SeqOp op, const HyperSeq& u, const HyperSeq& v) {
  switch (op) {
    case SeqOp::Add:
      return HyperSeq([u, v](Index k) { return u(k) + v(k); }, "(" + u.label() + ") + (" + v.label() + ")");
    case SeqOp::Sub:
      return HyperSeq([u, v](Index k) { return u(k) - v(k); }, "(" + u.label() + ") - (" + v.label() + ")");
    case SeqOp::Mul:
      return HyperSeq([u, v](Index k) { return u(k) * v(k); }, "(" + u.label() + ") * (" + v.label() + ")");
  }
  throw std::invalid_argument("unknown sequence operation");
}

HyperSeq realize(const RationalAsymptotic& a) {
  std::vector<std::pair<double, double>> terms;
  std::string label;
  for (const auto& [q, c] : a.terms()) {
    terms.emplace_back(q.convert_to<double>(), c.convert_to<double>());
    if (!label.empty()) label += " + ";
    label += c.str() + "*k^" + Rational(-q).str();
  }
  if (label.empty()) label = "0";
  return HyperSeq(
      [terms](Index k) {
        double sum = 0.0;
        for (const auto& [q, c] : terms) sum += c * std::pow(static_cast<double>(k), -q);
        return sum;
      },
      label);
}

double default_tolerance(Index k) { return 1.0 / std::sqrt(static_cast<double>(k)); }

void EvalWindow::validate() const {
  if (start < 1) throw std::invalid_argument("window start must be >= 1");
  if (length < 1) throw std::invalid_argument("window length must be >= 1");
  if (!tol) throw std::invalid_argument("window tolerance is empty");
}

const char* to_string(EventualVerdict::Kind k) {
  switch (k) {
    case EventualVerdict::Kind::HoldsOnWindow:
      return "HoldsOnWindow";
    case EventualVerdict::Kind::FailsRepeatedly:
      return "FailsRepeatedly";
    case EventualVerdict::Kind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

EventualVerdict is_negligible(const HyperSeq& u, const EvalWindow& w, double floor) {
  w.validate();
  WindowStats stats;
  stats.min_abs = std::numeric_limits<double>::infinity();
  std::vector<Index> violating;
  for (Index k = w.start; k < w.end(); ++k) {
    const double v = std::abs(u(k));
    const double tol = w.tol(k);
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    stats.max_abs = std::max(stats.max_abs, v);
    stats.min_abs = std::min(stats.min_abs, v);
    if (!(v < tol)) {
      ++stats.violations;
      stats.last_violation = k;
      violating.push_back(k);
    }
  }

  EventualVerdict verdict{EventualVerdict::Kind::Inconclusive, 0, {}, stats};
  const Index first_holding = stats.violations == 0 ? w.start : stats.last_violation + 1;
  if (first_holding <= w.start + w.length / 2) {
    verdict.kind = EventualVerdict::Kind::HoldsOnWindow;
    verdict.first_index = first_holding;
    return verdict;
  }
  if (stats.violations >= 3 && stats.min_abs >= floor) {
    verdict.kind = EventualVerdict::Kind::FailsRepeatedly;
    // Report the last few violations; they are the ones closest to "eventually".
    const auto count = std::min<std::size_t>(5, violating.size());
    verdict.witness_indices.assign(violating.end() - static_cast<std::ptrdiff_t>(count), violating.end());
  }
  return verdict;
}

Index overspill_index(const SeqFamily& family, Index k) {
  if (k < 1) throw std::invalid_argument("overspill index needs k >= 1");
  const auto lookahead = static_cast<Index>(std::floor(std::log(static_cast<double>(k))));
  Index best = 0;
  for (Index i = 1; i <= k; ++i) {
    const HyperSeq member = family(i);
    const double bound = 1.0 / static_cast<double>(i);
    bool ok = true;
    for (Index j = k; j <= k + lookahead; ++j) {
      if (!(std::abs(member(j)) < bound)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    best = i;
  }
  return best == 0 ? 1 : best;
}

HyperSeq diagonal_overspill(SeqFamily family) {
  return HyperSeq([family = std::move(family)](Index k) { return static_cast<double>(overspill_index(family, k)); },
                  "N(k)");
}

HyperSeq overspill_diagonal_trace(SeqFamily family) {
  return HyperSeq(
      [family = std::move(family)](Index k) { return family(overspill_index(family, k))(k); },
      "family(N(k))(k)");
}

const char* to_string(IndexComparison::Kind k) {
  switch (k) {
    case IndexComparison::Kind::EventuallyLess:
      return "EventuallyLess";
    case IndexComparison::Kind::EventuallyGreater:
      return "EventuallyGreater";
    case IndexComparison::Kind::EventuallyEqual:
      return "EventuallyEqual";
    case IndexComparison::Kind::Incomparable:
      return "Incomparable";
  }
  return "?";
}

IndexComparison compare_indices(const HyperSeq& n, const HyperSeq& n_prime, const EvalWindow& w) {
  w.validate();
  // Sign classes of n'(k) - n(k): 0 less, 1 equal, 2 greater.
  std::array<std::vector<Index>, 3> by_sign;
  int last_sign = 1;
  for (Index k = w.start; k < w.end(); ++k) {
    const double a = n(k);
    const double b = n_prime(k);
    if (a != std::round(a) || b != std::round(b)) {
      throw std::invalid_argument("compare_indices needs integer-valued sequences");
    }
    last_sign = b > a ? 2 : (b < a ? 0 : 1);
    by_sign[static_cast<std::size_t>(last_sign)].push_back(k);
  }

  const auto frequent = std::count_if(by_sign.begin(), by_sign.end(),
                                      [](const auto& v) { return v.size() >= 3; });
  IndexComparison result{IndexComparison::Kind::Incomparable, {}, {}};
  if (frequent >= 2) {
    auto take3 = [](const std::vector<Index>& v) { return std::vector<Index>(v.begin(), v.begin() + 3); };
    if (by_sign[2].size() >= 3) {
      result.greater_witnesses = take3(by_sign[2]);
      result.other_witnesses = take3(by_sign[0].size() >= 3 ? by_sign[0] : by_sign[1]);
    } else {
      result.greater_witnesses = take3(by_sign[1]);
      result.other_witnesses = take3(by_sign[0]);
    }
    return result;
  }
  constexpr std::array kinds = {IndexComparison::Kind::EventuallyLess,
                                IndexComparison::Kind::EventuallyEqual,
                                IndexComparison::Kind::EventuallyGreater};
  result.kind = kinds[static_cast<std::size_t>(last_sign)];
  return result;
}

}  // namespace hyperlab::seq

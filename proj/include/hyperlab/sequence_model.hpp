#pragma once

// The ring-of-sequences model of the hyperreals, restricted to what a
// computer can check: sequences k -> u(k) with termwise arithmetic, and
// "eventually" (cofinite-filter) truth tested over a finite window of indices.
// A free ultrafilter would decide every sign pattern; here undecided patterns
// come back as Inconclusive or Incomparable.

#include "hyperlab/asymptotic_number.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hyperlab::seq {

using Index = std::int64_t;

// A pure, total function of the index k >= 1.
class HyperSeq {
 public:
  using Term = std::function<double(Index)>;

  HyperSeq(Term term, std::string label) : term_(std::move(term)), label_(std::move(label)) {}

  double operator()(Index k) const { return term_(k); }
  const std::string& label() const { return label_; }

  static HyperSeq constant(double value);
  static HyperSeq identity();  // k -> k

 private:
  Term term_;
  std::string label_;
};

enum class SeqOp { Add, Sub, Mul };

HyperSeq seq_arith(SeqOp op, const HyperSeq& u, const HyperSeq& v);

inline HyperSeq operator+(const HyperSeq& u, const HyperSeq& v) { return seq_arith(SeqOp::Add, u, v); }
inline HyperSeq operator-(const HyperSeq& u, const HyperSeq& v) { return seq_arith(SeqOp::Sub, u, v); }
inline HyperSeq operator*(const HyperSeq& u, const HyperSeq& v) { return seq_arith(SeqOp::Mul, u, v); }

// Realization k -> sum_i c_i k^{-q_i} of an asymptotic number (e = 1/k).
HyperSeq realize(const RationalAsymptotic& a);

// k -> 1/sqrt(k)
double default_tolerance(Index k);

inline constexpr double kAppreciableFloor = 1e-3;

struct EvalWindow {
  Index start = 1000;
  Index length = 1000;
  std::function<double(Index)> tol = default_tolerance;

  Index end() const { return start + length; }  // one past the last index
  void validate() const;
};

struct WindowStats {
  Index violations = 0;       // indices with |u(k)| >= tol(k)
  Index last_violation = 0;   // 0 when there is none
  double max_abs = 0.0;
  double min_abs = 0.0;
};

struct EventualVerdict {
  enum class Kind { HoldsOnWindow, FailsRepeatedly, Inconclusive };
  Kind kind;
  Index first_index = 0;              // HoldsOnWindow
  std::vector<Index> witness_indices; // FailsRepeatedly
  WindowStats stats;
};

const char* to_string(EventualVerdict::Kind k);

// Negligibility relaxed to "|u(k)| < tol(k) eventually":
//   HoldsOnWindow   - the bound holds on a suffix covering at least half the window;
//   FailsRepeatedly - at least three violations and |u(k)| >= floor on the whole
//                     window (bounded away from zero);
//   Inconclusive    - neither.
EventualVerdict is_negligible(const HyperSeq& u, const EvalWindow& w = {},
                              double floor = kAppreciableFloor);

// Overspill by a diagonal: N(k) is the largest m <= k such that for every
// i <= m, max_{j in [k, k + floor(log k)]} |family(i)(j)| < 1/i (N(k) = 1 when
// no m qualifies). The returned sequence evaluates N(k) on demand.
using SeqFamily = std::function<HyperSeq(Index)>;

Index overspill_index(const SeqFamily& family, Index k);
HyperSeq diagonal_overspill(SeqFamily family);
// k -> family(N(k))(k)
HyperSeq overspill_diagonal_trace(SeqFamily family);

struct IndexComparison {
  enum class Kind { EventuallyLess, EventuallyGreater, EventuallyEqual, Incomparable };
  Kind kind;
  // Incomparable: indices where n' > n and where n' < n (or n' = n), >= 3 each.
  std::vector<Index> greater_witnesses;
  std::vector<Index> other_witnesses;
};

const char* to_string(IndexComparison::Kind k);

// Compares two integer-valued index sequences by the sign pattern of
// n'(k) - n(k) over the window. Two sign classes occurring at least three times
// each make the pair Incomparable; otherwise the class seen at the end of the
// window decides.
IndexComparison compare_indices(const HyperSeq& n, const HyperSeq& n_prime, const EvalWindow& w = {});

}  // namespace hyperlab::seq

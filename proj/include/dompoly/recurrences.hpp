#ifndef DOMPOLY_RECURRENCES_HPP
#define DOMPOLY_RECURRENCES_HPP

#include <cstdint>
#include <deque>
#include <vector>

#include "dompoly/graph_spec.hpp"
#include "dompoly/int_polynomial.hpp"

namespace dompoly {

// Every domination-polynomial family here satisfies, from some index on,
//
//     f_n(x) = x * (f_{n-1}(x) + f_{n-2}(x) + ... + f_{n-k}(x))
//
// with k = 2*ell + 1. The classes below come in two flavors:
//
//  * SlidingWindowSeries is the production evaluator: it keeps the window sum
//    incrementally (one add and one subtract per step) and is what grid scans
//    and the certifier run on.
//  * The *Stream classes are literal transcriptions of the individual
//    derivation routes (scheme A small-n cases, scheme B's (1+x)-step,
//    the relaxed route). They recompute window sums from scratch and exist
//    so the routes can be cross-validated against each other, against the
//    production evaluator, and against the brute-force oracle.

/// Generic window-recurrence evaluator. Yields f_0, f_1, ... one per next()
/// call: first the given seeds, then x times the running sum of the last k
/// values. Requires seeds.size() >= k by the time the recurrence is first
/// needed (callers that stop inside the seed range may pass fewer).
class SlidingWindowSeries {
 public:
  SlidingWindowSeries(std::int64_t k, std::vector<IntPolynomial> seeds);

  /// Reference valid until the following next() call.
  const IntPolynomial& next();

  /// Index the upcoming next() call will produce.
  std::int64_t upcoming_index() const { return pos_; }

 private:
  std::int64_t k_;
  std::vector<IntPolynomial> seeds_;
  std::deque<IntPolynomial> window_;
  IntPolynomial window_sum_;
  std::int64_t pos_ = 0;
};

/// Seed prefixes for the three families, truncated at `horizon` so that a
/// query for a small n never builds (or enumerates) more than it needs.
std::vector<IntPolynomial> path_power_seeds(std::int64_t ell,
                                            std::int64_t horizon);
std::vector<IntPolynomial> cycle_power_seeds(std::int64_t ell,
                                             std::int64_t horizon);
std::vector<IntPolynomial> relaxed_path_seeds(std::int64_t ell,
                                              std::int64_t horizon);

SlidingWindowSeries path_power_series(std::int64_t ell, std::int64_t horizon);
SlidingWindowSeries cycle_power_series(std::int64_t ell, std::int64_t horizon);
SlidingWindowSeries relaxed_path_series(std::int64_t ell,
                                        std::int64_t horizon);
SlidingWindowSeries power_series(Family family, std::int64_t ell,
                                 std::int64_t horizon);

/// Scheme A, transcribed case by case. For n in the small range the window
/// sum excludes f_0 and a gamma_1 correction term c*x is added; from
/// n = 2*ell+1 on it is the plain window recurrence. Sums are recomputed
/// fresh at every step.
class PathSchemeAStream {
 public:
  explicit PathSchemeAStream(std::int64_t ell);
  const IntPolynomial& next();

 private:
  std::int64_t ell_;
  std::int64_t n_ = 0;
  std::deque<IntPolynomial> window_;
};

/// Scheme B: complete-graph closed form up to n = ell+1, then the
/// (1+x)-step with a subtracted correction. Throws std::logic_error if a
/// subtraction ever drives a coefficient negative.
class PathSchemeBStream {
 public:
  explicit PathSchemeBStream(std::int64_t ell);
  const IntPolynomial& next();

 private:
  std::int64_t ell_;
  std::int64_t n_ = 0;
  std::deque<IntPolynomial> window_;
};

/// Cycle powers: complete-graph closed form up to n = 2*ell+1, then the
/// window recurrence with fresh sums.
class CycleRecurrenceStream {
 public:
  explicit CycleRecurrenceStream(std::int64_t ell);
  const IntPolynomial& next();

 private:
  std::int64_t ell_;
  std::int64_t n_ = 0;
  std::deque<IntPolynomial> window_;
};

/// Relaxed domination polynomials of path powers (coverage waived for the
/// first ell vertices): definition-derived base cases for n <= 2*ell, then
/// the window recurrence with fresh sums.
class RelaxedRecurrenceStream {
 public:
  RelaxedRecurrenceStream(std::int64_t ell, std::int64_t horizon);
  const IntPolynomial& next();

 private:
  std::int64_t ell_;
  std::int64_t n_ = 0;
  std::vector<IntPolynomial> bases_;
  std::deque<IntPolynomial> window_;
};

/// Third route to the path polynomials: combines ell+1 consecutive relaxed
/// polynomials. Defined for n >= ell+1; next() yields first_index(),
/// first_index()+1, ...
class PathViaRelaxedStream {
 public:
  PathViaRelaxedStream(std::int64_t ell, std::int64_t horizon);
  const IntPolynomial& next();
  std::int64_t first_index() const { return ell_ + 1; }

 private:
  std::int64_t ell_;
  RelaxedRecurrenceStream relaxed_;
  std::deque<IntPolynomial> tail_;
  IntPolynomial current_;
};

// Single-shot evaluations (thin wrappers over the streams above).

IntPolynomial path_domination_poly_a(std::int64_t n, std::int64_t ell);
IntPolynomial path_domination_poly_b(std::int64_t n, std::int64_t ell);
IntPolynomial cycle_domination_poly(std::int64_t n, std::int64_t ell);
IntPolynomial relaxed_path_domination_poly(std::int64_t n, std::int64_t ell);

/// Throws std::invalid_argument for n < ell+1 (the combination needs a full
/// window of relaxed values below n).
IntPolynomial path_domination_poly_via_relaxed(std::int64_t n,
                                               std::int64_t ell);

/// Number of single-vertex dominating sets of the n-vertex path power,
/// by closed form: n in the complete-graph range, 2*ell+2-n while one vertex
/// still reaches both ends, and 0 once n > 2*ell+1. Throws for n < 2.
std::int64_t count_singleton_dominating_sets(std::int64_t n, std::int64_t ell);

}  // namespace dompoly

#endif  // DOMPOLY_RECURRENCES_HPP

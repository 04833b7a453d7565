#include "dompoly/recurrences.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dompoly/binomial.hpp"
#include "dompoly/oracle.hpp"

namespace dompoly {

namespace {

void require_params(std::int64_t n, std::int64_t ell) {
  if (n < 0) throw std::invalid_argument("vertex count n must be >= 0");
  if (ell < 1) throw std::invalid_argument("graph power ell must be >= 1");
}

IntPolynomial run_stream_to(auto& stream, std::int64_t steps) {
  IntPolynomial result;
  for (std::int64_t i = 0; i < steps; ++i) result = stream.next();
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// SlidingWindowSeries

SlidingWindowSeries::SlidingWindowSeries(std::int64_t k,
                                         std::vector<IntPolynomial> seeds)
    : k_(k), seeds_(std::move(seeds)) {
  if (k_ < 1) throw std::invalid_argument("window length k must be >= 1");
}

const IntPolynomial& SlidingWindowSeries::next() {
  IntPolynomial f;
  if (pos_ < static_cast<std::int64_t>(seeds_.size())) {
    f = std::move(seeds_[pos_]);
  } else {
    if (static_cast<std::int64_t>(seeds_.size()) < k_) {
      throw std::logic_error(
          "SlidingWindowSeries: recurrence reached with fewer than k seeds");
    }
    f = window_sum_.times_x();
  }
  window_sum_ += f;
  window_.push_back(std::move(f));
  if (static_cast<std::int64_t>(window_.size()) > k_) {
    window_sum_ -= window_.front();
    window_.pop_front();
  }
  ++pos_;
  return window_.back();
}

// ---------------------------------------------------------------------------
// Seeds

std::vector<IntPolynomial> path_power_seeds(std::int64_t ell,
                                            std::int64_t horizon) {
  require_params(horizon, ell);
  const std::int64_t last = std::min(2 * ell, horizon);
  std::vector<IntPolynomial> seeds;
  seeds.reserve(last + 1);
  seeds.push_back(IntPolynomial::one());
  if (last >= 1) seeds.push_back(IntPolynomial::monomial(1, 1));
  // Running sum of f_1..f_{n-1}; f_0 enters the window sums only from
  // n = 2*ell+1 on, which is past the seed range.
  IntPolynomial sum = IntPolynomial::monomial(1, 1);
  for (std::int64_t n = 2; n <= last; ++n) {
    const std::int64_t singles = n <= ell + 1 ? n : 2 * ell + 2 - n;
    IntPolynomial f = sum.times_x();
    f += IntPolynomial::monomial(singles, 1);
    sum += f;
    seeds.push_back(std::move(f));
  }
  return seeds;
}

std::vector<IntPolynomial> cycle_power_seeds(std::int64_t ell,
                                             std::int64_t horizon) {
  require_params(horizon, ell);
  const std::int64_t last = std::min(2 * ell + 1, horizon);
  std::vector<IntPolynomial> seeds;
  seeds.reserve(last + 1);
  seeds.push_back(IntPolynomial::one());
  // For n <= 2*ell+1 the cycle power is complete: every nonempty subset
  // dominates, so the polynomial is (1+x)^n - 1.
  std::vector<mpz_class> row{1};
  for (std::int64_t n = 1; n <= last; ++n) {
    row.emplace_back(1);
    for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
    std::vector<mpz_class> coeffs(row.begin(), row.end());
    coeffs[0] = 0;
    seeds.emplace_back(std::move(coeffs));
  }
  return seeds;
}

std::vector<IntPolynomial> relaxed_path_seeds(std::int64_t ell,
                                              std::int64_t horizon) {
  require_params(horizon, ell);
  const std::int64_t last = std::min(2 * ell, horizon);
  std::vector<IntPolynomial> seeds;
  seeds.reserve(last + 1);
  for (std::int64_t n = 0; n <= last; ++n) {
    if (n <= ell) {
      // All n vertices are exempt: every subset qualifies.
      seeds.push_back(binomial_expansion(n));
    } else if (n <= kMaxBruteForceVertices) {
      seeds.push_back(brute_relaxed_domination_poly(
          build_power_graph({Family::PathPower, n, ell}),
          static_cast<int>(ell)));
    } else {
      // ell < n <= 2*ell, past the enumeration cap. Here only the last
      // vertex's coverage binds (any vertex within distance ell of v_n also
      // reaches every other non-exempt vertex), so the failing subsets are
      // exactly the subsets of the first n-ell-1 vertices.
      IntPolynomial f = binomial_expansion(n);
      f -= binomial_expansion(n - ell - 1);
      seeds.push_back(std::move(f));
    }
  }
  return seeds;
}

SlidingWindowSeries path_power_series(std::int64_t ell, std::int64_t horizon) {
  return SlidingWindowSeries(2 * ell + 1, path_power_seeds(ell, horizon));
}

SlidingWindowSeries cycle_power_series(std::int64_t ell, std::int64_t horizon) {
  return SlidingWindowSeries(2 * ell + 1, cycle_power_seeds(ell, horizon));
}

SlidingWindowSeries relaxed_path_series(std::int64_t ell,
                                        std::int64_t horizon) {
  return SlidingWindowSeries(2 * ell + 1, relaxed_path_seeds(ell, horizon));
}

SlidingWindowSeries power_series(Family family, std::int64_t ell,
                                 std::int64_t horizon) {
  return family == Family::PathPower ? path_power_series(ell, horizon)
                                     : cycle_power_series(ell, horizon);
}

// ---------------------------------------------------------------------------
// Scheme A

PathSchemeAStream::PathSchemeAStream(std::int64_t ell) : ell_(ell) {
  require_params(0, ell);
}

const IntPolynomial& PathSchemeAStream::next() {
  const std::int64_t n = n_++;
  IntPolynomial f;
  if (n == 0) {
    f = IntPolynomial::one();
  } else if (n == 1) {
    f = IntPolynomial::monomial(1, 1);
  } else {
    IntPolynomial sum;
    std::int64_t singles = 0;
    std::size_t skip = 0;
    if (n <= 2 * ell_) {
      // Window sum runs over f_1..f_{n-1}; the size-one dominating sets are
      // counted separately.
      skip = 1;
      singles = n <= ell_ + 1 ? n : 2 * ell_ + 2 - n;
    }
    for (auto it = window_.begin() + skip; it != window_.end(); ++it) sum += *it;
    f = sum.times_x();
    if (singles > 0) f += IntPolynomial::monomial(singles, 1);
  }
  window_.push_back(std::move(f));
  if (static_cast<std::int64_t>(window_.size()) > 2 * ell_ + 1) {
    window_.pop_front();
  }
  return window_.back();
}

// ---------------------------------------------------------------------------
// Scheme B

PathSchemeBStream::PathSchemeBStream(std::int64_t ell) : ell_(ell) {
  require_params(0, ell);
}

const IntPolynomial& PathSchemeBStream::next() {
  const std::int64_t n = n_++;
  IntPolynomial f;
  if (n == 0) {
    f = IntPolynomial::one();
  } else if (n <= ell_ + 1) {
    f = binomial_expansion(n);
    f -= IntPolynomial::one();
  } else {
    const IntPolynomial& prev = window_.back();
    f = prev + prev.times_x();
    if (n <= 2 * ell_ + 1) {
      f -= IntPolynomial::monomial(1, 1);
    } else {
      // window_ holds f_{n-2(ell+1)} .. f_{n-1}.
      f -= window_.front().times_x();
    }
    if (f.has_negative_coefficient()) {
      throw std::logic_error(
          "scheme B subtraction produced a negative coefficient");
    }
  }
  window_.push_back(std::move(f));
  if (static_cast<std::int64_t>(window_.size()) > 2 * ell_ + 2) {
    window_.pop_front();
  }
  return window_.back();
}

// ---------------------------------------------------------------------------
// Cycles

CycleRecurrenceStream::CycleRecurrenceStream(std::int64_t ell) : ell_(ell) {
  require_params(0, ell);
}

const IntPolynomial& CycleRecurrenceStream::next() {
  const std::int64_t n = n_++;
  IntPolynomial f;
  if (n == 0) {
    f = IntPolynomial::one();
  } else if (n <= 2 * ell_ + 1) {
    f = binomial_expansion(n);
    f -= IntPolynomial::one();
  } else {
    IntPolynomial sum;
    for (const IntPolynomial& g : window_) sum += g;
    f = sum.times_x();
  }
  window_.push_back(std::move(f));
  if (static_cast<std::int64_t>(window_.size()) > 2 * ell_ + 1) {
    window_.pop_front();
  }
  return window_.back();
}

// ---------------------------------------------------------------------------
// Relaxed route

RelaxedRecurrenceStream::RelaxedRecurrenceStream(std::int64_t ell,
                                                 std::int64_t horizon)
    : ell_(ell), bases_(relaxed_path_seeds(ell, horizon)) {}

const IntPolynomial& RelaxedRecurrenceStream::next() {
  const std::int64_t n = n_++;
  IntPolynomial f;
  if (n <= 2 * ell_) {
    if (n >= static_cast<std::int64_t>(bases_.size())) {
      throw std::logic_error(
          "RelaxedRecurrenceStream advanced past its construction horizon");
    }
    f = std::move(bases_[n]);
  } else {
    IntPolynomial sum;
    for (const IntPolynomial& g : window_) sum += g;
    f = sum.times_x();
  }
  window_.push_back(std::move(f));
  if (static_cast<std::int64_t>(window_.size()) > 2 * ell_ + 1) {
    window_.pop_front();
  }
  return window_.back();
}

PathViaRelaxedStream::PathViaRelaxedStream(std::int64_t ell,
                                           std::int64_t horizon)
    : ell_(ell), relaxed_(ell, std::max<std::int64_t>(horizon - 1, 0)) {}

const IntPolynomial& PathViaRelaxedStream::next() {
  // Before producing index n, tail_ holds the relaxed polynomials for
  // indices n-ell-1 .. n-1. Priming is deferred so a stream constructed
  // with a horizon below first_index() costs nothing unless misused.
  if (tail_.empty()) {
    for (std::int64_t i = 0; i <= ell_; ++i) tail_.push_back(relaxed_.next());
  } else {
    tail_.push_back(relaxed_.next());
    tail_.pop_front();
  }
  IntPolynomial sum;
  for (const IntPolynomial& g : tail_) sum += g;
  current_ = sum.times_x();
  return current_;
}

// ---------------------------------------------------------------------------
// Single-shot wrappers

IntPolynomial path_domination_poly_a(std::int64_t n, std::int64_t ell) {
  require_params(n, ell);
  PathSchemeAStream stream(ell);
  return run_stream_to(stream, n + 1);
}

IntPolynomial path_domination_poly_b(std::int64_t n, std::int64_t ell) {
  require_params(n, ell);
  PathSchemeBStream stream(ell);
  return run_stream_to(stream, n + 1);
}

IntPolynomial cycle_domination_poly(std::int64_t n, std::int64_t ell) {
  require_params(n, ell);
  CycleRecurrenceStream stream(ell);
  return run_stream_to(stream, n + 1);
}

IntPolynomial relaxed_path_domination_poly(std::int64_t n, std::int64_t ell) {
  require_params(n, ell);
  RelaxedRecurrenceStream stream(ell, n);
  return run_stream_to(stream, n + 1);
}

IntPolynomial path_domination_poly_via_relaxed(std::int64_t n,
                                               std::int64_t ell) {
  require_params(n, ell);
  if (n < ell + 1) {
    throw std::invalid_argument(
        "the relaxed route needs n >= ell+1 (a full window of relaxed "
        "polynomials below n)");
  }
  PathViaRelaxedStream stream(ell, n);
  return run_stream_to(stream, n - ell);
}

std::int64_t count_singleton_dominating_sets(std::int64_t n,
                                             std::int64_t ell) {
  require_params(n, ell);
  if (n < 2) throw std::invalid_argument("singleton count is defined for n >= 2");
  if (n <= ell + 1) return n;
  if (n <= 2 * ell + 1) return 2 * ell + 2 - n;
  return 0;
}

}  // namespace dompoly

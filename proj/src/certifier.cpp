#include "dompoly/certifier.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dompoly/recurrences.hpp"
#include "dompoly/sequence_checks.hpp"

namespace dompoly {

namespace {

// The zero polynomial's coefficient sequence is all zeros, so every index is
// a valid mode; an effectively unbounded interval keeps it unconstraining.
constexpr std::int64_t kUnboundedMode =
    std::numeric_limits<std::int64_t>::max() / 4;

std::pair<std::int64_t, std::int64_t> mode_interval_or_unbounded(
    const IntPolynomial& f, const ModeReport& report) {
  if (f.is_zero()) return {0, kUnboundedMode};
  return {report.mode_lo, report.mode_hi};
}

}  // namespace

const char* cert_failure_name(CertFailure reason) {
  switch (reason) {
    case CertFailure::NotUnimodal:
      return "not-unimodal";
    case CertFailure::NegativeCoefficient:
      return "negative-coefficient";
    case CertFailure::NoModeAssignment:
      return "no-barely-increasing-mode-assignment";
  }
  return "unknown";
}

CertifierReport certify_window_recurrence(std::int64_t k,
                                          std::span<const IntPolynomial> seeds,
                                          std::int64_t horizon) {
  if (k < 3) throw std::invalid_argument("certifier requires k >= 3");
  if (static_cast<std::int64_t>(seeds.size()) != k + 1) {
    throw std::invalid_argument("certifier expects exactly k+1 seeds f_0..f_k");
  }
  if (horizon < k) throw std::invalid_argument("horizon must be >= k");

  CertifierReport report;
  report.k = k;

  std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
  intervals.reserve(seeds.size());

  // reach = interval of mode values attainable at the current seed over all
  // barely increasing assignments of the prefix (steps of 0/1 keep it an
  // interval), so prefix feasibility is an O(1) update.
  std::int64_t reach_lo = 0;
  std::int64_t reach_hi = 0;

  auto finalize_prefix = [&](std::int64_t last_good) {
    report.verified_up_to = last_good;
    if (last_good >= 0) {
      auto modes = select_modes(
          std::span(intervals.data(), static_cast<std::size_t>(last_good + 1)));
      report.chosen_modes = std::move(modes.value());  // prefix feasibility was kept
    }
  };

  for (std::int64_t i = 0; i <= k; ++i) {
    const IntPolynomial& f = seeds[i];
    if (f.has_negative_coefficient()) {
      report.failure = {i, CertFailure::NegativeCoefficient};
      finalize_prefix(i - 1);
      return report;
    }
    const ModeReport mode = check_unimodal(f.coefficients());
    if (!mode.unimodal) {
      report.failure = {i, CertFailure::NotUnimodal};
      finalize_prefix(i - 1);
      return report;
    }
    const auto [lo, hi] = mode_interval_or_unbounded(f, mode);
    intervals.emplace_back(lo, hi);
    if (i == 0) {
      reach_lo = lo;
      reach_hi = hi;
    } else {
      reach_lo = std::max(reach_lo, lo);
      reach_hi = std::min(reach_hi + 1, hi);
      if (reach_lo > reach_hi) {
        report.failure = {i, CertFailure::NoModeAssignment};
        finalize_prefix(i - 1);
        return report;
      }
    }
  }

  auto modes = select_modes(intervals);
  report.chosen_modes = std::move(modes.value());  // seeds were verified feasible
  report.verified_up_to = k;

  SlidingWindowSeries series(
      k, std::vector<IntPolynomial>(seeds.begin(), seeds.end()));
  while (series.upcoming_index() <= k) series.next();

  for (std::int64_t n = k + 1; n <= horizon; ++n) {
    const IntPolynomial& f = series.next();
    if (f.has_negative_coefficient()) {
      report.failure = {n, CertFailure::NegativeCoefficient};
      return report;
    }
    const ModeReport mode = check_unimodal(f.coefficients());
    if (!mode.unimodal) {
      report.failure = {n, CertFailure::NotUnimodal};
      return report;
    }
    const auto [lo, hi] = mode_interval_or_unbounded(f, mode);
    const std::int64_t prev = report.chosen_modes.back();
    const std::int64_t pick = std::max(prev, lo);
    if (pick > std::min(hi, prev + 1)) {
      report.failure = {n, CertFailure::NoModeAssignment};
      return report;
    }
    report.chosen_modes.push_back(pick);
    report.verified_up_to = n;
  }
  return report;
}

}  // namespace dompoly

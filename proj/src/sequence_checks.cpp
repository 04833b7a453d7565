#include "dompoly/sequence_checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace dompoly {

ModeReport check_unimodal(std::span<const mpz_class> seq) {
  ModeReport report;
  if (seq.empty()) return report;
  bool fell = false;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const int cmp = mpz_cmp(seq[k].get_mpz_t(), seq[k - 1].get_mpz_t());
    if (cmp > 0 && fell) {
      report.unimodal = false;
      report.mode_lo = -1;
      report.mode_hi = -1;
      report.violation_index = static_cast<std::int64_t>(k);
      return report;
    }
    if (cmp < 0) fell = true;
  }
  std::size_t first_max = 0;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k] > seq[first_max]) first_max = k;
  }
  std::size_t last_max = first_max;
  while (last_max + 1 < seq.size() && seq[last_max + 1] == seq[first_max]) {
    ++last_max;
  }
  report.mode_lo = static_cast<std::int64_t>(first_max);
  report.mode_hi = static_cast<std::int64_t>(last_max);
  return report;
}

PropertyReport check_log_concave(std::span<const mpz_class> seq) {
  PropertyReport report;
  mpz_class lhs, rhs;
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    lhs = seq[k] * seq[k];
    rhs = seq[k - 1] * seq[k + 1];
    if (lhs < rhs) {
      report.holds = false;
      report.witness = static_cast<std::int64_t>(k);
      return report;
    }
  }
  return report;
}

PropertyReport check_ultra_log_concave(std::span<const mpz_class> seq,
                                       std::size_t n) {
  std::vector<mpz_class> row(n + 1);
  row[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at every step.
    row[k] = row[k - 1] * static_cast<unsigned long>(n - k + 1);
    mpz_divexact_ui(row[k].get_mpz_t(), row[k].get_mpz_t(),
                    static_cast<unsigned long>(k));
  }
  return check_ultra_log_concave(seq, n, row);
}

PropertyReport check_ultra_log_concave(
    std::span<const mpz_class> seq, std::size_t n,
    std::span<const mpz_class> binomial_row) {
  if (seq.size() != n + 1) {
    throw std::invalid_argument(
        "ultra log-concavity needs a sequence indexed 0..n");
  }
  if (binomial_row.size() != n + 1) {
    throw std::invalid_argument("binomial row must have n+1 entries");
  }
  PropertyReport report;
  mpz_class lhs, rhs;
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    if (seq[k - 1] == 0 || seq[k + 1] == 0) continue;  // rhs is 0, lhs >= 0
    lhs = seq[k] * seq[k];
    lhs *= binomial_row[k - 1];
    lhs *= binomial_row[k + 1];
    rhs = seq[k - 1] * seq[k + 1];
    rhs *= binomial_row[k];
    rhs *= binomial_row[k];
    if (lhs < rhs) {
      report.holds = false;
      report.witness = static_cast<std::int64_t>(k);
      return report;
    }
  }
  return report;
}

PropertyReport check_barely_increasing(std::span<const std::int64_t> modes) {
  PropertyReport report;
  for (std::size_t i = 1; i < modes.size(); ++i) {
    const std::int64_t step = modes[i] - modes[i - 1];
    if (step < 0 || step > 1) {
      report.holds = false;
      report.witness = static_cast<std::int64_t>(i);
      return report;
    }
  }
  return report;
}

std::optional<std::vector<std::int64_t>> select_modes(
    std::span<const std::pair<std::int64_t, std::int64_t>> intervals) {
  for (const auto& [lo, hi] : intervals) {
    if (lo > hi) throw std::invalid_argument("select_modes: empty interval");
  }
  if (intervals.empty()) return std::vector<std::int64_t>{};

  // feasible[i]: the values in [lo_i, hi_i] from which intervals i+1.. can
  // still be completed with steps of 0 or 1. Intersecting intervals keeps
  // intervals, so one sweep suffices.
  const std::size_t count = intervals.size();
  std::vector<std::pair<std::int64_t, std::int64_t>> feasible(count);
  feasible[count - 1] = intervals[count - 1];
  for (std::size_t i = count - 1; i-- > 0;) {
    const auto [next_lo, next_hi] = feasible[i + 1];
    const std::int64_t lo = std::max(intervals[i].first, next_lo - 1);
    const std::int64_t hi = std::min(intervals[i].second, next_hi);
    if (lo > hi) return std::nullopt;
    feasible[i] = {lo, hi};
  }

  std::vector<std::int64_t> modes(count);
  modes[0] = feasible[0].first;
  for (std::size_t i = 1; i < count; ++i) {
    modes[i] = std::max(modes[i - 1], feasible[i].first);
  }
  return modes;
}

}  // namespace dompoly

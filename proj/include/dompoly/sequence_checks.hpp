#ifndef DOMPOLY_SEQUENCE_CHECKS_HPP
#define DOMPOLY_SEQUENCE_CHECKS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dompoly {

/// Unimodality verdict. When unimodal, [mode_lo, mode_hi] is the full
/// plateau of maximum positions (each is a valid mode: the sequence rises
/// weakly to mode_lo and falls weakly from mode_hi); the empty sequence is
/// vacuously unimodal with mode_lo = 0 > mode_hi = -1. When not unimodal,
/// violation_index is the first position that rises after a strict fall.
struct ModeReport {
  bool unimodal = true;
  std::int64_t mode_lo = 0;
  std::int64_t mode_hi = -1;
  std::optional<std::int64_t> violation_index;
};

ModeReport check_unimodal(std::span<const mpz_class> seq);

/// Verdict plus the first index where an inequality fails.
struct PropertyReport {
  bool holds = true;
  std::optional<std::int64_t> witness;
};

/// a_k^2 >= a_{k-1} * a_{k+1} at every interior index.
PropertyReport check_log_concave(std::span<const mpz_class> seq);

/// Ultra log-concavity of a sequence indexed 0..n (seq.size() must equal
/// n+1): for every 1 <= k <= n-1,
///     a_k^2 * C(n,k-1) * C(n,k+1) >= a_{k-1} * a_{k+1} * C(n,k)^2,
/// the cross-multiplied exact-integer form of log-concavity of a_k/C(n,k).
/// The second overload reuses a precomputed row C(n, 0..n).
PropertyReport check_ultra_log_concave(std::span<const mpz_class> seq,
                                       std::size_t n);
PropertyReport check_ultra_log_concave(std::span<const mpz_class> seq,
                                       std::size_t n,
                                       std::span<const mpz_class> binomial_row);

/// Consecutive differences all 0 or 1. The witness is the index of the
/// second element of the first offending pair.
PropertyReport check_barely_increasing(std::span<const std::int64_t> modes);

/// Picks m_i in [lo_i, hi_i] with m_{i+1} - m_i in {0, 1}, or nullopt when
/// no such selection exists. The choice is the pointwise-smallest one: a
/// right-to-left sweep narrows each interval to the values from which the
/// rest can still be completed, then a forward pass takes the smallest
/// feasible value >= the previous pick. Throws std::invalid_argument on an
/// empty interval (lo > hi).
std::optional<std::vector<std::int64_t>> select_modes(
    std::span<const std::pair<std::int64_t, std::int64_t>> intervals);

}  // namespace dompoly

#endif  // DOMPOLY_SEQUENCE_CHECKS_HPP

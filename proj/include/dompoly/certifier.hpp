#ifndef DOMPOLY_CERTIFIER_HPP
#define DOMPOLY_CERTIFIER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dompoly/int_polynomial.hpp"

namespace dompoly {

enum class CertFailure {
  NotUnimodal,
  NegativeCoefficient,
  NoModeAssignment,
};

/// Wire/report names: "not-unimodal", "negative-coefficient",
/// "no-barely-increasing-mode-assignment".
const char* cert_failure_name(CertFailure reason);

struct CertifierFailure {
  std::int64_t index = 0;
  CertFailure reason = CertFailure::NotUnimodal;
};

/// Outcome of certify_window_recurrence. chosen_modes[i] is the mode picked
/// for f_i, for 0 <= i <= verified_up_to; the picks are barely increasing by
/// construction. verified_up_to is -1 when even f_0 fails.
struct CertifierReport {
  std::int64_t k = 0;
  std::int64_t verified_up_to = -1;
  std::vector<std::int64_t> chosen_modes;
  std::optional<CertifierFailure> failure;

  bool certified() const { return !failure.has_value(); }
};

/// Checks that every polynomial of the window-recurrence sequence
///
///     f_n(x) = x * (f_{n-1} + ... + f_{n-k}),   n > k,
///
/// seeded with the k+1 given polynomials f_0..f_k, has a nonnegative
/// unimodal coefficient sequence admitting a barely increasing mode
/// assignment, out to f_horizon. Stops at the first failure. When the seeds
/// pass, every extension is guaranteed to pass as well, so a post-seed
/// failure can only expose a bug in the evaluator — which makes the run a
/// regression test of the recurrence machinery at the same time.
///
/// Throws std::invalid_argument for k < 3, seeds.size() != k+1, or
/// horizon < k.
CertifierReport certify_window_recurrence(std::int64_t k,
                                          std::span<const IntPolynomial> seeds,
                                          std::int64_t horizon);

}  // namespace dompoly

#endif  // DOMPOLY_CERTIFIER_HPP

#ifndef DOMPOLY_VERIFY_HPP
#define DOMPOLY_VERIFY_HPP

#include <cstdint>
#include <string>

namespace dompoly {

/// Outcome of one verification suite. `checks` counts individual exact
/// comparisons; `detail` carries the first counterexample when failed (and
/// occasionally extra context when passed).
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string detail;
};

/// Route agreement: scheme A == scheme B == relaxed combination (for
/// n >= ell+1) == production sliding-window series, for every n <= n_max,
/// ell <= ell_max.
SuiteResult verify_routes(std::int64_t n_max, std::int64_t ell_max);

/// Recurrence outputs equal brute-force enumeration: both families for
/// 1 <= ell <= n <= n_max, plus the relaxed polynomials for all n <= n_max.
/// n_max is capped at 26 by the enumeration bound.
SuiteResult verify_oracle(std::int64_t n_max);

/// Closed forms for cycle powers: (1+x)^n - 1 up to n = 2*ell+1, and the
/// first recurrence step (1+x)^{2l+2} - (2l+2)x - 1 at n = 2*ell+2.
SuiteResult verify_cycle_closed_forms(std::int64_t ell_max);

/// Path coefficient identities: the Pascal-style step and the singleton
/// step on ell+2 <= n <= 2*ell+1, the singleton closed form, and the
/// binomial tail gamma_m = C(n,m) for m >= max(1, n-ell).
SuiteResult verify_path_identities(std::int64_t ell_max);

/// verify_cycle_closed_forms + verify_path_identities (the CLI
/// "identities" suite).
SuiteResult verify_identities(std::int64_t ell_max);

/// Certifier behavior: the known failing seed family (f_0=3, f_1=x,
/// f_i=2x^2) must fail at exactly n = k for k = 3..8, and domination
/// seeds with k = 2*ell+1 must certify out to n = 300 for ell <= 8 with a
/// barely increasing mode sequence. Exposed on the CLI as suite "theorem6".
SuiteResult verify_certifier();

/// Unimodality over the grid plus the mode-location claim that ceil(n/2)
/// lies in every mode interval. The second clause is known to fail for
/// small ell (first at path, ell=1, n=6); the suite reports it honestly.
SuiteResult verify_mode_structure(std::int64_t n_max, std::int64_t ell_max);

/// Coefficient sequences weakly increase up to ceil(n/2) (all n) and weakly
/// decrease from floor(3n/4) on (n >= 2; the single-vertex graph is an
/// isolated vertex, which the decreasing bound excludes).
SuiteResult verify_monotone_bounds(std::int64_t n_max, std::int64_t ell_max);

/// Ultra-log-concavity (with unimodality and log-concavity alongside) over
/// the full grid for both families, via the scan engine.
SuiteResult verify_ultra_log_concavity(std::int64_t n_max,
                                       std::int64_t ell_max, int jobs);

}  // namespace dompoly

#endif  // DOMPOLY_VERIFY_HPP

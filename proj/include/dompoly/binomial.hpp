#ifndef DOMPOLY_BINOMIAL_HPP
#define DOMPOLY_BINOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "dompoly/int_polynomial.hpp"

namespace dompoly {

/// (1+x)^n; coefficient of x^k is C(n, k).
IntPolynomial binomial_expansion(std::int64_t n);

/// Exact C(n, k); 0 for k > n.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

/// Pascal-triangle rows 0..n_max, shared read-only by grid scans so the
/// ultra-log-concavity comparisons do not rebuild C(n, .) per row.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t n_max);

  std::span<const mpz_class> row(std::size_t n) const;

  std::size_t max_n() const { return rows_.size() - 1; }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

}  // namespace dompoly

#endif  // DOMPOLY_BINOMIAL_HPP

#include "dompoly/binomial.hpp"

#include <stdexcept>
#include <utility>

namespace dompoly {

IntPolynomial binomial_expansion(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("binomial_expansion: n must be >= 0");
  std::vector<mpz_class> row{1};
  for (std::int64_t i = 1; i <= n; ++i) {
    row.emplace_back(1);
    for (std::size_t k = row.size() - 2; k >= 1; --k) row[k] += row[k - 1];
  }
  return IntPolynomial(std::move(row));
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BinomialTable::BinomialTable(std::size_t n_max) {
  rows_.resize(n_max + 1);
  rows_[0] = {mpz_class(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = 1;
    rows_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
}

std::span<const mpz_class> BinomialTable::row(std::size_t n) const {
  if (n >= rows_.size()) throw std::out_of_range("BinomialTable: row out of range");
  return rows_[n];
}

}  // namespace dompoly

#ifndef DOMPOLY_INT_POLYNOMIAL_HPP
#define DOMPOLY_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace dompoly {

/// Dense univariate polynomial with arbitrary-precision signed integer
/// coefficients. coeffs[k] is the coefficient of x^k.
///
/// Canonical form: the last stored coefficient is nonzero, or the storage is
/// empty (the zero polynomial). Every operation returns canonical results.
/// Negative coefficients are permitted; the recurrence layer re-checks
/// nonnegativity where it is an invariant of the quantity being computed.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  /// Takes ownership of a coefficient vector and canonicalizes it.
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  /// Convenience builder for small literal polynomials in tests and seeds:
  /// from({0, 1, 3, 1}) is x + 3x^2 + x^3.
  static IntPolynomial from(std::initializer_list<long> coeffs);

  /// c * x^k (the zero polynomial when c == 0).
  static IntPolynomial monomial(mpz_class c, std::size_t k);

  static IntPolynomial one() { return monomial(1, 0); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial; -1 stands in for the degree of the zero
  /// polynomial (all true degrees are >= 0).
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }

  /// Coefficient of x^k; zero beyond the stored range.
  const mpz_class& operator[](std::size_t k) const;

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Sum of all coefficients, i.e. the value at x = 1.
  mpz_class value_at_one() const;

  bool has_negative_coefficient() const;

  /// Smallest k with a nonzero coefficient; -1 for the zero polynomial.
  std::int64_t min_support() const;

  /// The same polynomial multiplied by x^shift.
  IntPolynomial times_x(std::size_t shift = 1) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }

  /// Exact convolution product (schoolbook; every product in this codebase
  /// has one factor of tiny degree, so nothing fancier is warranted).
  friend IntPolynomial operator*(const IntPolynomial& lhs,
                                 const IntPolynomial& rhs);

  friend bool operator==(const IntPolynomial& lhs,
                         const IntPolynomial& rhs) = default;

  /// "[0, 1, 3, 1]" — coefficient list by ascending degree.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
  }

 private:
  void canonicalize();

  std::vector<mpz_class> coeffs_;
};

}  // namespace dompoly

#endif  // DOMPOLY_INT_POLYNOMIAL_HPP

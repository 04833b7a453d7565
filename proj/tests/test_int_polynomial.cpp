#include "dompoly/int_polynomial.hpp"

#include <random>
#include <vector>

#include <doctest.h>

#include "dompoly/binomial.hpp"

namespace dompoly {
namespace {

IntPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree_dist(-1, 12);
  std::uniform_int_distribution<long> coeff_dist(-99, 99);
  const int degree = degree_dist(rng);
  std::vector<mpz_class> coeffs;
  for (int k = 0; k <= degree; ++k) coeffs.emplace_back(coeff_dist(rng));
  return IntPolynomial(std::move(coeffs));
}

TEST_CASE("canonical form strips trailing zeros; zero polynomial is empty") {
  const IntPolynomial p(std::vector<mpz_class>{0, 1, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == IntPolynomial::from({0, 1}));

  const IntPolynomial zero(std::vector<mpz_class>{0, 0});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero == IntPolynomial());
  CHECK(zero.min_support() == -1);
}

TEST_CASE("addition") {
  CHECK(IntPolynomial::from({0, 1}) + IntPolynomial::from({1, 1}) ==
        IntPolynomial::from({1, 2}));
  const IntPolynomial p = IntPolynomial::from({0, 2, 5});
  CHECK(p + IntPolynomial() == p);
  // Sum of two path-power polynomials, also checked against the enumeration
  // oracle in test_recurrences.
  CHECK(IntPolynomial::from({0, 1, 3, 1}) + IntPolynomial::from({0, 2, 1}) ==
        IntPolynomial::from({0, 3, 4, 1}));
}

TEST_CASE("subtraction") {
  CHECK(IntPolynomial::from({0, 2, 1}) - IntPolynomial::from({0, 1}) ==
        IntPolynomial::from({0, 1, 1}));
  const IntPolynomial p = IntPolynomial::from({4, 0, 7});
  CHECK((p - p).is_zero());
  // (1+x)(2x+x^2) - x, the step that produces the 3-vertex path polynomial.
  const IntPolynomial step =
      IntPolynomial::from({1, 1}) * IntPolynomial::from({0, 2, 1}) -
      IntPolynomial::from({0, 1});
  CHECK(step == IntPolynomial::from({0, 1, 3, 1}));
}

TEST_CASE("multiplication") {
  CHECK(IntPolynomial::from({1, 1}) * IntPolynomial::from({1, 1}) ==
        IntPolynomial::from({1, 2, 1}));
  CHECK(IntPolynomial::from({0, 1}) * IntPolynomial::from({1, 1, 1}) ==
        IntPolynomial::from({0, 1, 1, 1}));
  CHECK(IntPolynomial::from({1, 1}) * IntPolynomial::from({0, 1, 3, 1}) ==
        IntPolynomial::from({0, 1, 4, 4, 1}));
  CHECK((IntPolynomial() * IntPolynomial::from({5})).is_zero());
}

TEST_CASE("binomial expansion") {
  CHECK(binomial_expansion(0) == IntPolynomial::from({1}));
  CHECK(binomial_expansion(2) == IntPolynomial::from({1, 2, 1}));
  CHECK(binomial_expansion(4) == IntPolynomial::from({1, 4, 6, 4, 1}));

  IntPolynomial product = IntPolynomial::one();
  const IntPolynomial one_plus_x = IntPolynomial::from({1, 1});
  for (int n = 0; n <= 20; ++n) {
    CHECK(binomial_expansion(n) == product);
    product = product * one_plus_x;
  }
}

TEST_CASE("value at one") {
  CHECK(IntPolynomial::from({0, 1, 3, 1}).value_at_one() == 5);
  CHECK(IntPolynomial().value_at_one() == 0);
  for (int n : {1, 5, 17, 40}) {
    IntPolynomial p = binomial_expansion(n);
    p -= IntPolynomial::one();
    mpz_class expected = 1;
    expected <<= n;
    expected -= 1;  // every nonempty subset of n elements
    CHECK(p.value_at_one() == expected);
  }
}

TEST_CASE("times_x shifts and preserves zero") {
  CHECK(IntPolynomial::from({1, 2}).times_x() == IntPolynomial::from({0, 1, 2}));
  CHECK(IntPolynomial::from({1}).times_x(3) ==
        IntPolynomial::from({0, 0, 0, 1}));
  CHECK(IntPolynomial().times_x().is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240817);
  for (int iter = 0; iter < 300; ++iter) {
    const IntPolynomial p = random_poly(rng);
    const IntPolynomial q = random_poly(rng);
    const IntPolynomial r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) - q == p);
    if (!p.is_zero() && !q.is_zero()) {
      CHECK((p * q).degree() == p.degree() + q.degree());
    }
    // Canonical-form round trip.
    for (const IntPolynomial* s : {&p, &q, &r}) {
      const auto& coeffs = s->coefficients();
      CHECK((coeffs.empty() || coeffs.back() != 0));
    }
    const auto sum_coeffs = (p + q).coefficients();
    CHECK((sum_coeffs.empty() || sum_coeffs.back() != 0));
    const auto prod_coeffs = (p * q).coefficients();
    CHECK((prod_coeffs.empty() || prod_coeffs.back() != 0));
  }
}

TEST_CASE("binomial helpers agree") {
  const BinomialTable table(40);
  for (std::size_t n = 0; n <= 40; ++n) {
    const auto row = table.row(n);
    const IntPolynomial expansion = binomial_expansion(n);
    REQUIRE(row.size() == n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(row[k] == expansion[k]);
      CHECK(row[k] == binomial(n, k));
    }
  }
  CHECK(binomial(5, 7) == 0);
}

}  // namespace
}  // namespace dompoly

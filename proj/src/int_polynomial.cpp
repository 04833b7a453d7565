#include "dompoly/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dompoly {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  canonicalize();
}

IntPolynomial IntPolynomial::from(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(mpz_class c, std::size_t k) {
  if (c == 0) return IntPolynomial();
  std::vector<mpz_class> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

const mpz_class& IntPolynomial::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

mpz_class IntPolynomial::value_at_one() const {
  mpz_class sum = 0;
  for (const mpz_class& c : coeffs_) sum += c;
  return sum;
}

bool IntPolynomial::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpz_class& c) { return c < 0; });
}

std::int64_t IntPolynomial::min_support() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<std::int64_t>(k);
  }
  return -1;
}

IntPolynomial IntPolynomial::times_x(std::size_t shift) const {
  if (is_zero() || shift == 0) {
    IntPolynomial copy = *this;
    return copy;
  }
  std::vector<mpz_class> shifted(coeffs_.size() + shift);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) shifted[k + shift] = coeffs_[k];
  return IntPolynomial(std::move(shifted));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  canonicalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<mpz_class> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(prod));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k];
  }
  os << ']';
  return os.str();
}

void IntPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace dompoly

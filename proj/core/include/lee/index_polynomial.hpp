#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lee/rational.hpp"

namespace lee {

/// Dense univariate polynomial in the polytropic index n with exact rational
/// coefficients.
///
/// Stored as integer numerators over one common positive denominator, reduced
/// so that gcd(numerators..., denominator) = 1 and the top numerator is
/// nonzero. The zero polynomial has no numerators and denominator 1. With that
/// normalization two polynomials are equal iff their stored data is equal.
class IndexPolynomial {
 public:
  IndexPolynomial() = default;
  IndexPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  IndexPolynomial(long constant) : IndexPolynomial(Rational(constant)) {}  // NOLINT

  /// Position j of `coefficients` is the coefficient of n^j. Trailing zeros are trimmed.
  static IndexPolynomial from_coefficients(std::span<const Rational> coefficients);
  static IndexPolynomial monomial(const Rational& coefficient, std::size_t power);
  /// The polynomial "n".
  static IndexPolynomial index() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return numerators_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(numerators_.size()) - 1; }
  /// Number of stored coefficients, degree() + 1.
  std::size_t size() const noexcept { return numerators_.size(); }

  /// Coefficient of n^j; zero beyond the degree.
  Rational coefficient(std::size_t j) const;
  std::vector<Rational> coefficients() const;

  std::span<const mpz_class> numerators() const noexcept { return numerators_; }
  const mpz_class& denominator() const noexcept { return denominator_; }

  /// Exact Horner evaluation.
  Rational evaluate(const Rational& n) const;

  /// Canonical text, e.g. "-n*(8*n - 5)/15120". Zero prints as "0".
  std::string to_string() const;

  IndexPolynomial operator-() const;
  IndexPolynomial& operator+=(const IndexPolynomial& rhs);
  IndexPolynomial& operator-=(const IndexPolynomial& rhs);
  IndexPolynomial& operator*=(const IndexPolynomial& rhs);
  IndexPolynomial& operator*=(const Rational& rhs);
  /// Throws ArithmeticError when `rhs` is zero.
  IndexPolynomial& operator/=(const Rational& rhs);

  friend IndexPolynomial operator+(IndexPolynomial lhs, const IndexPolynomial& rhs) { return lhs += rhs; }
  friend IndexPolynomial operator-(IndexPolynomial lhs, const IndexPolynomial& rhs) { return lhs -= rhs; }
  friend IndexPolynomial operator*(const IndexPolynomial& lhs, const IndexPolynomial& rhs);
  friend IndexPolynomial operator*(IndexPolynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend IndexPolynomial operator*(const Rational& lhs, IndexPolynomial rhs) { return rhs *= lhs; }
  friend IndexPolynomial operator/(IndexPolynomial lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const IndexPolynomial& lhs, const IndexPolynomial& rhs) {
    return lhs.denominator_ == rhs.denominator_ && lhs.numerators_ == rhs.numerators_;
  }

 private:
  IndexPolynomial(std::vector<mpz_class> numerators, mpz_class denominator);
  void normalize();

  std::vector<mpz_class> numerators_;
  mpz_class denominator_ = 1;
};

std::ostream& operator<<(std::ostream& os, const IndexPolynomial& p);

}  // namespace lee

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lee/index_polynomial.hpp"
#include "lee/rational.hpp"

namespace lee {

/// Maclaurin coefficients a[k](n) of the Lane-Emden solution with f(0) = 1,
/// f'(0) = 0, together with the coefficients c[k](n) of f(x)^n.
///
/// Both sequences cover every index 0..max_index; odd entries are stored as
/// explicit zeros.
struct CoefficientTable {
  std::size_t max_index = 0;
  std::vector<IndexPolynomial> a;
  std::vector<IndexPolynomial> c;
};

/// All coefficients with index <= m, in exact arithmetic.
///
///     a[k] = -c[k-2] / (k^2 + k)
///     c[k] = (1/k) * sum_{l=1..k} (l*(n + 1) - k) * a[l] * c[k-l]
///
/// seeded with a[0] = c[0] = 1, a[1] = c[1] = 0.
CoefficientTable compute_coefficients(std::size_t m);

/// Coefficients 0..m of b(x)^q by the J.C.P. Miller recurrence
///
///     c[0] = b[0]^q
///     c[k] = 1/(k*b[0]) * sum_{l=1..k} (l*(q + 1) - k) * b[l] * c[k-l]
///
/// Entries of `b` past its end are zero. Throws DomainError if `b` is empty or
/// b[0] = 0, and UnsupportedExponentError if q is not a nonnegative integer
/// while b[0] != 1.
std::vector<Rational> miller_power(std::span<const Rational> b, const Rational& q, std::size_t m);

/// Product of two series truncated to degree m.
std::vector<Rational> truncated_product(std::span<const Rational> lhs, std::span<const Rational> rhs,
                                        std::size_t m);

/// b(x)^exponent truncated to degree m by repeated truncated multiplication.
/// Independent of the Miller recurrence; used as its oracle.
std::vector<Rational> truncated_power(std::span<const Rational> b, unsigned exponent, std::size_t m);

/// The table's a[k] evaluated at a fixed index.
struct EvaluatedTable {
  Rational n_value;
  std::size_t max_index = 0;
  std::vector<Rational> a_values;
};

EvaluatedTable evaluate_table(const CoefficientTable& table, const Rational& n_value);

/// Coefficients for a fixed (possibly non-integer) index computed directly by
/// the recurrence in rational arithmetic, without the symbolic table.
/// Agrees entrywise with evaluate_table(compute_coefficients(m), exponent).
struct NumericSeries {
  Rational exponent;
  std::size_t max_index = 0;
  std::vector<Rational> a_values;
};

/// Throws DomainError for a negative exponent.
NumericSeries compute_numeric_series(const Rational& exponent, std::size_t m);

/// Checks c[k](n_value) against the brute-force truncated n_value-th power of
/// the evaluated a-series for every k <= m. Throws std::invalid_argument if
/// m exceeds the table.
bool verify_c_by_power(const CoefficientTable& table, unsigned n_value, std::size_t m);

}  // namespace lee

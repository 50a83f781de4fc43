#pragma once

#include <cstddef>
#include <vector>

#include "lee/rational.hpp"
#include "lee/series_engine.hpp"

namespace lee {

/// Maclaurin polynomial of degree max_index for one fixed index n.
class TruncatedSeries {
 public:
  /// Throws DomainError if `a_values` is empty or has a nonzero odd entry.
  TruncatedSeries(Rational n_value, std::vector<Rational> a_values);
  explicit TruncatedSeries(const EvaluatedTable& table);
  explicit TruncatedSeries(const NumericSeries& series);

  const Rational& n_value() const noexcept { return n_value_; }
  std::size_t max_index() const noexcept { return a_values_.size() - 1; }
  const std::vector<Rational>& a_values() const noexcept { return a_values_; }
  /// a[0], a[2], a[4], ... rounded to double.
  const std::vector<double>& even_coefficients() const noexcept { return even_; }

 private:
  Rational n_value_;
  std::vector<Rational> a_values_;
  std::vector<double> even_;
};

/// Horner in u = x^2 over the even coefficients.
double eval_series_float(const TruncatedSeries& s, double x);

Rational eval_series_exact(const TruncatedSeries& s, const Rational& x);

/// Coefficients of x^0..x^(m-2) of f'' + (2/x) f' + f^n for the degree-m
/// truncation f of the evaluated table, with f^n formed by brute-force
/// truncated multiplication. Empty for m < 2. Throws std::invalid_argument if
/// m exceeds the table.
std::vector<Rational> residual_coefficients(const CoefficientTable& table, unsigned n_value, std::size_t m);

}  // namespace lee

#include "lee/series_eval.hpp"

#include <stdexcept>
#include <utility>

#include "lee/errors.hpp"

namespace lee {

TruncatedSeries::TruncatedSeries(Rational n_value, std::vector<Rational> a_values)
    : n_value_(std::move(n_value)), a_values_(std::move(a_values)) {
  if (a_values_.empty()) throw DomainError("truncated series needs at least a[0]");
  for (std::size_t k = 0; k < a_values_.size(); ++k) {
    if (k % 2 == 1) {
      if (!a_values_[k].is_zero()) throw DomainError("odd coefficient of an even series is nonzero");
      continue;
    }
    even_.push_back(a_values_[k].to_double());
  }
}

TruncatedSeries::TruncatedSeries(const EvaluatedTable& table) : TruncatedSeries(table.n_value, table.a_values) {}

TruncatedSeries::TruncatedSeries(const NumericSeries& series)
    : TruncatedSeries(series.exponent, series.a_values) {}

double eval_series_float(const TruncatedSeries& s, double x) {
  const double u = x * x;
  const auto& even = s.even_coefficients();
  double acc = 0.0;
  for (auto it = even.rbegin(); it != even.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Rational eval_series_exact(const TruncatedSeries& s, const Rational& x) {
  const Rational u = x * x;
  const auto& a = s.a_values();
  Rational acc;
  const std::size_t top = (a.size() - 1) / 2 * 2;
  for (std::size_t k = top + 2; k >= 2; k -= 2) {
    acc *= u;
    acc += a[k - 2];
  }
  return acc;
}

std::vector<Rational> residual_coefficients(const CoefficientTable& table, unsigned n_value, std::size_t m) {
  if (m > table.max_index) throw std::invalid_argument("residual order exceeds the coefficient table");
  if (m < 2) return {};
  const Rational n(static_cast<long>(n_value));
  std::vector<Rational> f;
  f.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) f.push_back(table.a[k].evaluate(n));

  const std::size_t order = m - 2;
  std::vector<Rational> residual = truncated_power(f, n_value, order);
  for (std::size_t j = 0; j <= order; ++j) {
    const long k = static_cast<long>(j + 2);
    // x^j coefficient of f'' is k(k-1) a_k, of (2/x) f' is 2k a_k
    residual[j] += Rational(k * (k - 1) + 2 * k) * f[j + 2];
  }
  return residual;
}

}  // namespace lee

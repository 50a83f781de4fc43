#include "lee/series_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "lee/errors.hpp"

namespace lee {

CoefficientTable compute_coefficients(std::size_t m) {
  CoefficientTable t;
  t.max_index = m;
  t.a.reserve(m + 1);
  t.c.reserve(m + 1);
  t.a.emplace_back(1);
  t.c.emplace_back(1);
  if (m >= 1) {
    t.a.emplace_back();
    t.c.emplace_back();
  }

  const IndexPolynomial n = IndexPolynomial::index();
  for (std::size_t k = 2; k <= m; ++k) {
    if (k % 2 == 1) {
      t.a.emplace_back();
      t.c.emplace_back();
      continue;
    }
    const long kk = static_cast<long>(k);
    t.a.push_back(-t.c[k - 2] / Rational(kk * kk + kk));

    IndexPolynomial sum;
    for (std::size_t l = 2; l <= k; l += 2) {
      if (t.a[l].is_zero() || t.c[k - l].is_zero()) continue;
      const long ll = static_cast<long>(l);
      // l*(n + 1) - k = l*n + (l - k)
      const IndexPolynomial bracket = Rational(ll) * n + IndexPolynomial(ll - kk);
      sum += bracket * (t.a[l] * t.c[k - l]);
    }
    t.c.push_back(sum / Rational(kk));
  }
  return t;
}

std::vector<Rational> miller_power(std::span<const Rational> b, const Rational& q, std::size_t m) {
  if (b.empty() || b[0].is_zero()) throw DomainError("series power needs a nonzero constant term");

  const bool nonneg_integer = q.is_integer() && q.sign() >= 0;
  Rational leading;
  if (nonneg_integer) {
    if (!q.numerator().fits_ulong_p()) throw UnsupportedExponentError("exponent too large");
    leading = pow(b[0], static_cast<long>(q.numerator().get_ui()));
  } else if (b[0] == Rational(1)) {
    leading = Rational(1);
  } else {
    throw UnsupportedExponentError("non-integer or negative exponent requires a unit constant term");
  }

  std::vector<Rational> c;
  c.reserve(m + 1);
  c.push_back(leading);
  const Rational q_plus_one = q + Rational(1);
  for (std::size_t k = 1; k <= m; ++k) {
    Rational sum;
    const std::size_t top = std::min(k, b.size() - 1);
    for (std::size_t l = 1; l <= top; ++l) {
      if (b[l].is_zero() || c[k - l].is_zero()) continue;
      const Rational bracket = Rational(static_cast<long>(l)) * q_plus_one - Rational(static_cast<long>(k));
      sum += bracket * b[l] * c[k - l];
    }
    c.push_back(sum / (Rational(static_cast<long>(k)) * b[0]));
  }
  return c;
}

std::vector<Rational> truncated_product(std::span<const Rational> lhs, std::span<const Rational> rhs,
                                        std::size_t m) {
  std::vector<Rational> out(m + 1);
  for (std::size_t i = 0; i < lhs.size() && i <= m; ++i) {
    if (lhs[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.size() && i + j <= m; ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

std::vector<Rational> truncated_power(std::span<const Rational> b, unsigned exponent, std::size_t m) {
  std::vector<Rational> acc(m + 1);
  acc[0] = Rational(1);
  for (unsigned i = 0; i < exponent; ++i) acc = truncated_product(acc, b, m);
  return acc;
}

EvaluatedTable evaluate_table(const CoefficientTable& table, const Rational& n_value) {
  EvaluatedTable out{n_value, table.max_index, {}};
  out.a_values.reserve(table.a.size());
  for (const auto& p : table.a) out.a_values.push_back(p.evaluate(n_value));
  return out;
}

NumericSeries compute_numeric_series(const Rational& exponent, std::size_t m) {
  if (exponent.sign() < 0) throw DomainError("negative polytropic index");
  NumericSeries out{exponent, m, {}};
  auto& a = out.a_values;
  std::vector<Rational> c;
  a.reserve(m + 1);
  c.reserve(m + 1);
  a.emplace_back(1);
  c.emplace_back(1);
  if (m >= 1) {
    a.emplace_back();
    c.emplace_back();
  }
  const Rational q_plus_one = exponent + Rational(1);
  for (std::size_t k = 2; k <= m; ++k) {
    if (k % 2 == 1) {
      a.emplace_back();
      c.emplace_back();
      continue;
    }
    const long kk = static_cast<long>(k);
    a.push_back(-c[k - 2] / Rational(kk * kk + kk));
    Rational sum;
    for (std::size_t l = 2; l <= k; l += 2) {
      const Rational bracket = Rational(static_cast<long>(l)) * q_plus_one - Rational(kk);
      sum += bracket * a[l] * c[k - l];
    }
    c.push_back(sum / Rational(kk));
  }
  return out;
}

bool verify_c_by_power(const CoefficientTable& table, unsigned n_value, std::size_t m) {
  if (m > table.max_index) throw std::invalid_argument("verification order exceeds the coefficient table");
  const Rational n(static_cast<long>(n_value));
  std::vector<Rational> a;
  a.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) a.push_back(table.a[k].evaluate(n));
  const std::vector<Rational> brute = truncated_power(a, n_value, m);
  for (std::size_t k = 0; k <= m; ++k)
    if (table.c[k].evaluate(n) != brute[k]) return false;
  return true;
}

}  // namespace lee

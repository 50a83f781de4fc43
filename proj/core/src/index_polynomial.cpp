#include "lee/index_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "lee/errors.hpp"

namespace lee {

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void append_power(std::string& out, std::size_t power) {
  out += "n";
  if (power > 1) out += "**" + std::to_string(power);
}

}  // namespace

IndexPolynomial::IndexPolynomial(std::vector<mpz_class> numerators, mpz_class denominator)
    : numerators_(std::move(numerators)), denominator_(std::move(denominator)) {
  normalize();
}

IndexPolynomial::IndexPolynomial(const Rational& constant) {
  if (!constant.is_zero()) {
    numerators_.push_back(constant.numerator());
    denominator_ = constant.denominator();
  }
}

IndexPolynomial IndexPolynomial::from_coefficients(std::span<const Rational> coefficients) {
  mpz_class common = 1;
  for (const auto& c : coefficients) common = lcm(common, c.denominator());
  std::vector<mpz_class> nums;
  nums.reserve(coefficients.size());
  for (const auto& c : coefficients) nums.push_back(c.numerator() * (common / c.denominator()));
  return IndexPolynomial(std::move(nums), std::move(common));
}

IndexPolynomial IndexPolynomial::monomial(const Rational& coefficient, std::size_t power) {
  if (coefficient.is_zero()) return {};
  std::vector<mpz_class> nums(power + 1, mpz_class(0));
  nums[power] = coefficient.numerator();
  return IndexPolynomial(std::move(nums), coefficient.denominator());
}

void IndexPolynomial::normalize() {
  while (!numerators_.empty() && numerators_.back() == 0) numerators_.pop_back();
  if (numerators_.empty()) {
    denominator_ = 1;
    return;
  }
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    for (auto& v : numerators_) v = -v;
  }
  mpz_class g = denominator_;
  for (const auto& v : numerators_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 1) {
    for (auto& v : numerators_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational IndexPolynomial::coefficient(std::size_t j) const {
  if (j >= numerators_.size()) return Rational();
  return Rational(numerators_[j], denominator_);
}

std::vector<Rational> IndexPolynomial::coefficients() const {
  std::vector<Rational> out;
  out.reserve(numerators_.size());
  for (std::size_t j = 0; j < numerators_.size(); ++j) out.push_back(coefficient(j));
  return out;
}

Rational IndexPolynomial::evaluate(const Rational& n) const {
  // Horner on the integer numerators, then one division by the denominator.
  Rational acc;
  for (auto it = numerators_.rbegin(); it != numerators_.rend(); ++it) {
    acc *= n;
    acc += Rational(*it);
  }
  return acc / Rational(denominator_);
}

std::string IndexPolynomial::to_string() const {
  if (is_zero()) return "0";

  // p = sign * (content / denominator) * n^shift * primitive(n)
  std::size_t shift = 0;
  while (numerators_[shift] == 0) ++shift;

  mpz_class content = 0;
  for (const auto& v : numerators_) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  const bool negative = numerators_.back() < 0;

  std::vector<mpz_class> primitive;
  for (std::size_t j = shift; j < numerators_.size(); ++j) {
    mpz_class v = numerators_[j] / content;
    primitive.push_back(negative ? mpz_class(-v) : v);
  }

  std::vector<std::string> factors;
  const bool has_index_part = shift > 0 || primitive.size() > 1;
  if (content != 1 || !has_index_part) factors.push_back(content.get_str());
  if (shift > 0) {
    std::string power;
    append_power(power, shift);
    factors.push_back(std::move(power));
  }
  if (primitive.size() > 1) {
    std::string body;
    for (std::size_t j = primitive.size(); j-- > 0;) {
      const mpz_class& v = primitive[j];
      if (v == 0) continue;
      if (body.empty()) {
        if (v < 0) body += "-";
      } else {
        body += v < 0 ? " - " : " + ";
      }
      const mpz_class magnitude = ::abs(v);
      if (j == 0) {
        body += magnitude.get_str();
      } else {
        if (magnitude != 1) body += magnitude.get_str() + "*";
        append_power(body, j);
      }
    }
    factors.push_back("(" + body + ")");
  }

  std::string out = negative ? "-" : "";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "*";
    out += factors[i];
  }
  if (denominator_ != 1) out += "/" + denominator_.get_str();
  return out;
}

IndexPolynomial IndexPolynomial::operator-() const {
  IndexPolynomial out = *this;
  for (auto& v : out.numerators_) v = -v;
  return out;
}

IndexPolynomial& IndexPolynomial::operator+=(const IndexPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const mpz_class common = lcm(denominator_, rhs.denominator_);
  const mpz_class scale_lhs = common / denominator_;
  const mpz_class scale_rhs = common / rhs.denominator_;
  if (numerators_.size() < rhs.numerators_.size()) numerators_.resize(rhs.numerators_.size(), mpz_class(0));
  if (scale_lhs != 1)
    for (auto& v : numerators_) v *= scale_lhs;
  for (std::size_t j = 0; j < rhs.numerators_.size(); ++j) {
    // v += rhs * scale without a temporary
    mpz_addmul(numerators_[j].get_mpz_t(), rhs.numerators_[j].get_mpz_t(), scale_rhs.get_mpz_t());
  }
  denominator_ = common;
  normalize();
  return *this;
}

IndexPolynomial& IndexPolynomial::operator-=(const IndexPolynomial& rhs) { return *this += -rhs; }

IndexPolynomial operator*(const IndexPolynomial& lhs, const IndexPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> product(lhs.numerators_.size() + rhs.numerators_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < lhs.numerators_.size(); ++i) {
    if (lhs.numerators_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.numerators_.size(); ++j) {
      mpz_addmul(product[i + j].get_mpz_t(), lhs.numerators_[i].get_mpz_t(),
                 rhs.numerators_[j].get_mpz_t());
    }
  }
  return IndexPolynomial(std::move(product), lhs.denominator_ * rhs.denominator_);
}

IndexPolynomial& IndexPolynomial::operator*=(const IndexPolynomial& rhs) { return *this = *this * rhs; }

IndexPolynomial& IndexPolynomial::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) return *this = IndexPolynomial();
  const mpz_class num = rhs.numerator();
  for (auto& v : numerators_) v *= num;
  denominator_ *= rhs.denominator();
  normalize();
  return *this;
}

IndexPolynomial& IndexPolynomial::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("polynomial division by zero");
  return *this *= Rational(1) / rhs;
}

std::ostream& operator<<(std::ostream& os, const IndexPolynomial& p) { return os << p.to_string(); }

}  // namespace lee

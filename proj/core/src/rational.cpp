#include "lee/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "lee/errors.hpp"

namespace lee {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num_text)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (!is_digits(den_text))
    throw ParseError("malformed rational '" + std::string(text) + "'",
                     slash == std::string_view::npos ? 0 : slash + 1);

  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (negative) num = -num;
  return Rational(num, den);
}

double Rational::to_double() const {
  const int s = sign();
  if (s == 0) return 0.0;
  const mpz_class a = ::abs(value_.get_num());
  const mpz_class& b = value_.get_den();

  // Quotient with 55 or 56 significant bits plus a sticky flag for the remainder.
  const long shift = 55 - (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
  mpz_class num = a;
  mpz_class den = b;
  if (shift >= 0)
    num <<= static_cast<mp_bitcnt_t>(shift);
  else
    den <<= static_cast<mp_bitcnt_t>(-shift);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const bool sticky = r != 0;

  const long extra = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 53;
  const mpz_class low = q & ((mpz_class(1) << static_cast<mp_bitcnt_t>(extra)) - 1);
  q >>= static_cast<mp_bitcnt_t>(extra);
  const mpz_class half = mpz_class(1) << static_cast<mp_bitcnt_t>(extra - 1);
  if (low > half || (low == half && (sticky || mpz_odd_p(q.get_mpz_t())))) q += 1;

  const double magnitude = std::ldexp(q.get_d(), static_cast<int>(extra - shift));
  return s < 0 ? -magnitude : magnitude;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw ArithmeticError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), e);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace lee

#include "lee/expression_parser.hpp"

#include <cctype>
#include <string>

#include "lee/errors.hpp"

namespace lee {

namespace {

enum class TokenKind { integer, index, plus, minus, star, power, slash, lparen, rparen, end, invalid };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t position;
};

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  IndexPolynomial parse() {
    IndexPolynomial result = expression();
    if (current_.kind != TokenKind::end) fail("unexpected token");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    const std::string token = current_.kind == TokenKind::end ? "end of input" : "'" + std::string(current_.text) + "'";
    throw ParseError(message + " " + token + " at position " + std::to_string(current_.position),
                     current_.position);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) {
      current_ = {TokenKind::end, {}, start};
      return;
    }
    const char ch = text_[pos_];
    auto single = [&](TokenKind kind) {
      ++pos_;
      current_ = {kind, text_.substr(start, 1), start};
    };
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = {TokenKind::integer, text_.substr(start, pos_ - start), start};
      return;
    }
    switch (ch) {
      case 'n': return single(TokenKind::index);
      case '+': return single(TokenKind::plus);
      case '-': return single(TokenKind::minus);
      case '/': return single(TokenKind::slash);
      case '(': return single(TokenKind::lparen);
      case ')': return single(TokenKind::rparen);
      case '*':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
          pos_ += 2;
          current_ = {TokenKind::power, text_.substr(start, 2), start};
          return;
        }
        return single(TokenKind::star);
      default:
        current_ = {TokenKind::invalid, text_.substr(start, 1), start};
        fail("invalid character");
    }
  }

  IndexPolynomial expression() {
    IndexPolynomial acc = term();
    while (current_.kind == TokenKind::plus || current_.kind == TokenKind::minus) {
      const bool add = current_.kind == TokenKind::plus;
      advance();
      if (add)
        acc += term();
      else
        acc -= term();
    }
    return acc;
  }

  IndexPolynomial term() {
    IndexPolynomial acc = unary();
    while (current_.kind == TokenKind::star || current_.kind == TokenKind::slash) {
      const bool multiply = current_.kind == TokenKind::star;
      const Token op = current_;
      advance();
      const Token operand_start = current_;
      IndexPolynomial rhs = unary();
      if (multiply) {
        acc *= rhs;
        continue;
      }
      if (rhs.degree() > 0) {
        current_ = operand_start;
        fail("divisor is not a constant:");
      }
      if (rhs.is_zero()) throw ArithmeticError("division by zero at position " + std::to_string(op.position));
      acc /= rhs.coefficient(0);
    }
    return acc;
  }

  IndexPolynomial unary() {
    if (current_.kind == TokenKind::minus) {
      advance();
      return -unary();
    }
    if (current_.kind == TokenKind::plus) {
      advance();
      return unary();
    }
    return power();
  }

  IndexPolynomial power() {
    IndexPolynomial base = atom();
    if (current_.kind != TokenKind::power) return base;
    advance();
    const Token exponent_start = current_;
    const IndexPolynomial exponent = unary();
    const Rational e = exponent.coefficient(0);
    if (exponent.degree() > 0 || !e.is_integer() || e.sign() < 0 || e.numerator() > kMaxExponent) {
      current_ = exponent_start;
      fail("exponent must be a nonnegative integer constant:");
    }
    IndexPolynomial result(1);
    for (long i = e.numerator().get_si(); i > 0; --i) result *= base;
    return result;
  }

  IndexPolynomial atom() {
    switch (current_.kind) {
      case TokenKind::integer: {
        const mpz_class value(std::string(current_.text), 10);
        advance();
        return IndexPolynomial(Rational(value));
      }
      case TokenKind::index:
        advance();
        return IndexPolynomial::index();
      case TokenKind::lparen: {
        advance();
        IndexPolynomial inner = expression();
        if (current_.kind != TokenKind::rparen) fail("expected ')' but found");
        advance();
        return inner;
      }
      default:
        fail("expected a number, 'n' or '(' but found");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokenKind::end, {}, 0};
};

}  // namespace

IndexPolynomial parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace lee

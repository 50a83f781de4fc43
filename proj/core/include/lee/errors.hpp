#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lee {

/// Exact arithmetic forbidden case, e.g. division by zero.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An argument lies outside the domain of an operation (zero leading term, negative index...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A power whose exact value is not a rational number.
class UnsupportedExponentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  /// Byte offset of the offending token in the input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lee

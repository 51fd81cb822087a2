#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relkummer {

// Arithmetic on a value outside an operation's domain (division by zero,
// root of a non-power, class outside the module, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The instance violates a structural requirement: p prime, char k != p,
// p^l | |k| - 1, field-size cap, order of zeta.
class UnsupportedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity that must hold by construction failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument(what + " at " + std::to_string(line) + ":" +
                              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace relkummer

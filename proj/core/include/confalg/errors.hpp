#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace confalg {

/// Operands live in scalar rings with different parameter lists.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structure constant or linear map violates the Z/2 grading.
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The bracket parameter variable already occurs in an argument.
class VariableCaptureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver that needs rational constants was handed a parametric algebra.
class InstantiationRequired : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input does not satisfy the algebraic hypothesis an operation requires.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace confalg

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qvl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntax error in quiver DSL text, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a structural rule (unknown arrow,
/// non-parallel relation terms, mismatched shapes, bad parameters, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed: a representation violates a
/// relation, a map is not a homomorphism, a matrix is singular, ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would visit more candidate points than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qvl

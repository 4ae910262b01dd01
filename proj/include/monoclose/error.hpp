#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoclose {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands whose lengths or ambient rings disagree.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An operation applied outside its domain (zero/unit ideal, point outside
/// the Newton polyhedron, bad family parameters, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured work budget was exhausted.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Malformed ideal input. Positions are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Bad command-line usage.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace monoclose

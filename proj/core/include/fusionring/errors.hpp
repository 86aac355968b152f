#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionring {

/// Shape or encoding problem that prevents a ring from being examined at
/// all (rank/tensor mismatch, out-of-range indices, arithmetic overflow).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed to reach its acceptance threshold.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called on data it is not defined for, e.g. a character table
/// of a noncommutative ring.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fusionring

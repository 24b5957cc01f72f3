#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entmeter {

/// Bad caller input: wrong shape, out-of-range index, incompatible convention.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to converge or produced an inconsistent result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested dimension exceeds the dense-storage cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input data violates a named invariant (normalization, hermiticity, ...).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, const std::string& what)
      : std::runtime_error(invariant + ": " + what), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace entmeter

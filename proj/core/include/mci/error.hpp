#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mci {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: table dimensions, ids outside the carrier, mismatched
/// domains/codomains. Distinct from a law violation.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An enumeration was asked to run over a carrier larger than its guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mci

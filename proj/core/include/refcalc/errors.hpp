#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text did not conform to the DSL or a JSON schema. Line and column are 1-based;
// a column one past the end of the line means "unexpected end of input".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column),
        bare_message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& bare_message() const noexcept { return bare_message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string bare_message_;
};

// Well-formed input whose parts do not fit together (index mismatch, bad dimensions).
class TypeError : public Error {
 public:
  using Error::Error;
};

// Arithmetic between scalars of different coefficient domains.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// A brute-force search would exceed the configured candidate cap.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// An internal invariant was violated (e.g. a pairing met an infinite intersection).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace refcalc

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urndis {

// Malformed or empty input (samples, tables, urn specs).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's documented range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Jackknife variance requested with fewer than two x-observations.
class UndefinedVariance : public DomainError {
 public:
  using DomainError::DomainError;
};

// Brute-force / enumeration size guard exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input could not be parsed. line() is 1-based; 0 means the error is
// not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace urndis

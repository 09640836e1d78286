#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexdense {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed grammar, PCP or word text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A documented precondition of an operation does not hold for its arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (enumerated words, automaton states) was hit; the result would be truncated.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A constructed witness failed its own verification. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexdense

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afenum {

// Base of every error thrown by the library. The C API maps each subclass to
// one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad vertex index, bad parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

// A text format could not be parsed. `line()` is 1-based; 0 if unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The framework is syntactically fine but refers to something undeclared.
class SemanticError : public ParseError {
 public:
  using ParseError::ParseError;
};

// An operation was called outside its precondition (e.g. a non-oriented graph
// handed to the oriented enumerator).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mapped-back set violates a structural property the mapping relies on.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Instance too large for the chosen algorithm, or a wall-clock budget ran out.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A checked internal invariant failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace afenum

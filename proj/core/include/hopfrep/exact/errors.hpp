#pragma once

#include <stdexcept>
#include <string>

namespace hopfrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when a computation would need scalars outside Q(i).
class LeavesFieldError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A span of matrices was expected to be closed under products but is not.
class NotClosedError : public Error {
 public:
  using Error::Error;
};

/// The rewriting engine exceeded its step budget.
class RewriteLimitError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfrep

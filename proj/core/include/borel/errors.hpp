#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borel {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: arity mismatch, out-of-range index, bad text.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotStronglyStable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Zero or unit ideal passed where a proper nonzero ideal is required.
class DegenerateIdeal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegreeBoundExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotSquarefree : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotCohenMacaulay : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An irreducible component of a grid ideal is not of the form
/// (x_{1,g_1}, ..., x_{t,g_t}) with g_1 <= ... <= g_t.
class ConditionStarViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Input too large for a brute-force oracle.
class OracleSizeExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace borel

// Exception hierarchy shared by every module.  All failures derive from
// curvcones::Error so callers can catch the library as a whole, and the CLI
// maps the concrete types onto its exit-code contract.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvcones {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An index or parameter fell outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A value was structurally valid but outside the mathematical domain
// (e.g. a dimension too small for the requested construction).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller passed arguments that do not fit together (bad combination,
// malformed literal, duplicate coordinate name, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A constructed object violates its own invariants (symmetry residuals,
// unsorted data, inconsistent caches).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An iterative numeric procedure failed: non-convergence, singular or
// indefinite matrices, loss of precision.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Two quantities that must agree do not (e.g. a declared kernel dimension
// versus the computed spectrum).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A closed-form expression was requested outside the hypothesis under which
// it is valid.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Expression evaluation left the function's domain (sqrt of a negative,
// log of a non-positive value, division by zero, non-finite result).
class EvalError : public Error {
 public:
  using Error::Error;
};

// An input document (chart file, report) does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Text could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace curvcones

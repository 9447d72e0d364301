#pragma once

#include <stdexcept>
#include <string>

namespace symplab {

/// Base class of every error raised by the library. Carries the name of the
/// operation that failed so the CLI can emit a {op, reason} record.
class Error : public std::runtime_error {
 public:
  Error(std::string op, const std::string& reason)
      : std::runtime_error(op + ": " + reason), op_(std::move(op)), reason_(reason) {}

  const std::string& op() const noexcept { return op_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string op_;
  std::string reason_;
};

/// Matrix or vector dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (non-closed form, non-regular
/// element, odd degree where even is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two algebra objects were built over different contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this kind of input (e.g. Hodge check
/// on a model without an inner product).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A form degree lies outside [0, top_degree].
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symplab

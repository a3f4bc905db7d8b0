#pragma once

#include <stdexcept>
#include <string>

namespace acp {

// Base for every error raised by the library. The CLI maps UsageError to
// exit code 1 and capacity/arithmetic problems to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

// Raised when a traversal observes a state that the algebra rules out.
// Seeing one means a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedPacking : public Error {
 public:
  using Error::Error;
};

class InvalidQuadruple : public Error {
 public:
  enum class Reason { not_descartes, imprimitive, bad_parity, not_root };

  InvalidQuadruple(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace acp

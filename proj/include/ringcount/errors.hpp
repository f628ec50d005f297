#pragma once

#include <stdexcept>
#include <string>

namespace ringcount {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid construction parameters (non-prime p, s = 0, bad dimensions, ...).
struct ParameterError : Error {
  using Error::Error;
};

/// Operands belong to different ring handles.
struct RingMismatch : ParameterError {
  using ParameterError::ParameterError;
};

struct UnitRequired : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// An enumeration would emit more objects than the configured guard allows.
struct GuardExceeded : Error {
  using Error::Error;
};

/// Two independent computations that must agree did not. Never expected.
struct InternalFault : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace ringcount

#pragma once

#include <stdexcept>
#include <string>

namespace latmeans {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary or n-ary operation live in different dimensions, or
/// an arity does not match (weights vs. arguments, degree vs. slots).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition (negative entry, s < 1,
/// non-finite scalar, malformed partition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured computational bound was exceeded (enumeration bound, grid
/// size, polarization degree).
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace latmeans

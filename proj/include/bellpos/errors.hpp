#pragma once

#include <stdexcept>
#include <string>

namespace bellpos {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition or invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// Scalar argument outside its mathematical domain.
struct DomainError : Error {
  using Error::Error;
};

/// Requested matrix or tensor-product dimension exceeds the configured cap.
struct SizeError : Error {
  using Error::Error;
};

/// Two grid descriptors that must agree do not.
struct ShapeError : Error {
  using Error::Error;
};

/// The grid cannot resolve a required feature (discontinuity, support set).
struct ResolutionError : Error {
  using Error::Error;
};

/// Incompatible run configuration, e.g. a grid incommensurate with a period.
struct ConfigError : Error {
  using Error::Error;
};

/// An iterative solver ran out of iterations; carries its last estimate.
struct IterationError : Error {
  IterationError(const std::string& msg, double last)
      : Error(msg), last_estimate(last) {}
  double last_estimate;
};

/// Adaptive quadrature could not reach the requested tolerance.
struct IntegrationError : Error {
  using Error::Error;
};

/// Too much state mass falls outside the grid; suggests a usable extent.
struct TruncationError : Error {
  TruncationError(const std::string& msg, double required)
      : Error(msg), required_x_max(required) {}
  double required_x_max;
};

}  // namespace bellpos

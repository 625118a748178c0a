#pragma once

#include <stdexcept>
#include <string>

namespace fluxring {

/// Base of every error thrown by the library. The CLI maps `UsageError` to
/// exit code 1 and every other `Error` to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad request shape: empty grids, undersized windows, wrong list contents.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Geometry or field configuration is missing a required quantity.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Field amplitudes that carry no information (N = 0, beta = 0 with both
/// flux conditions satisfied).
class DegenerateFieldError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGeometryError : public Error {
 public:
  using Error::Error;
};

/// Overlap matrix of a generalized eigenproblem is not positive definite.
class SingularOverlapError : public Error {
 public:
  using Error::Error;
};

/// Ground state is degenerate (half-integer sigma*ell) where a unique one is
/// required.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Iterative routine failed to converge or lost its invariants.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Discretization box too small for the state being resolved.
class DomainSizeError : public Error {
 public:
  using Error::Error;
};

/// Search window too small to contain the minimizer.
class WindowError : public Error {
 public:
  using Error::Error;
};

}  // namespace fluxring

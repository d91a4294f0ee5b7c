#pragma once

#include <stdexcept>
#include <string>

namespace zetaforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Argument hits a pole (Γ at a non-positive integer, ζ at 1).
class PoleError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PoleError"; }
};

/// Argument outside the supported domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// Non-integer evaluation requested too close to an integer.
class NearIntegerError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "NearIntegerError"; }
};

class NonConvergence : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NonConvergence"; }
};

/// No admissible parameter choice certifies the requested precision.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PrecisionUnreachable"; }
};

}  // namespace zetaforge

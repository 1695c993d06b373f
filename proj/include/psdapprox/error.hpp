#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace psdapprox {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the command-line reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

/// A named invariant of an input was violated; `measured` carries the
/// offending residual or eigenvalue.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string invariant, double measured, const std::string& message)
      : Error(message), invariant_(std::move(invariant)), measured_(measured) {}

  const char* kind() const noexcept override { return "precondition"; }
  const std::string& invariant() const noexcept { return invariant_; }
  double measured() const noexcept { return measured_; }

 private:
  std::string invariant_;
  double measured_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(double residual, const std::string& message)
      : Error(message), residual_(residual) {}

  const char* kind() const noexcept override { return "convergence"; }
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Raised when a family expected to commute does not; identifies the worst pair.
class NonCommutingError : public Error {
 public:
  NonCommutingError(std::size_t first, std::size_t second, double residual,
                    const std::string& message)
      : Error(message), first_(first), second_(second), residual_(residual) {}

  const char* kind() const noexcept override { return "non_commuting"; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t first_;
  std::size_t second_;
  double residual_;
};

}  // namespace psdapprox

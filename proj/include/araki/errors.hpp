#pragma once

#include <stdexcept>
#include <string>

namespace araki {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input does not describe a valid state (non-Hermitian, wrong trace, negative spectrum).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of the operands do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Spectrum outside the interval the functional calculus needs.
class SpectralError : public Error {
 public:
  using Error::Error;
};

/// Interval / grid configuration rejected.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller-side precondition not met (e.g. non-commuting projections).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Should be unreachable for valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of its interval budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual estimate " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A checked inequality failed beyond its tolerance. margin = rhs - lhs (< 0).
class InequalityViolation : public Error {
 public:
  InequalityViolation(const std::string& what, double margin)
      : Error(what + " (margin " + std::to_string(margin) + ")"), margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

}  // namespace araki

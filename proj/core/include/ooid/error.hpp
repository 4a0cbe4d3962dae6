#pragma once

#include <stdexcept>
#include <string>

namespace ooid {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation (non-finite x, y < 0, c1 <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input inside the domain but outside the range where the result is defined (y > y_bar).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Malformed call arguments (sample count too small, bad configuration).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// c1_hat lies outside the realizable set for its q.
class NotRealizableError : public Error {
 public:
  using Error::Error;
};

// c1_hat sits exactly on the critical boundary; the curve would be unbounded.
class DegenerateLimitError : public NotRealizableError {
 public:
  using NotRealizableError::NotRealizableError;
};

// The curvature profile has no zero (q == 0).
class NoZeroError : public Error {
 public:
  using Error::Error;
};

// Iterative method failed to converge (bracket expansion, root bracketing).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Adaptive refinement exhausted its budget; carries the best estimate reached.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// Sampled data contradicts an invariant it must satisfy (e.g. kappa <= 0 inside a segment).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// A computed result violates a mathematical invariant; signals a numerics bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Coincident points where a geometric estimator needs distinct ones.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// A moving polyline stopped being a simple, positively oriented polygon.
class TopologyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ooid

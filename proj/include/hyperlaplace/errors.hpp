#pragma once

#include <stdexcept>
#include <string>

namespace hyperlaplace {

/// Raised when an iterative evaluation (series, quadrature) cannot meet its
/// stopping rule. Argument-domain violations use std::domain_error /
/// std::invalid_argument instead.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature gave up before reaching the requested tolerance.
/// Carries the best available estimate.
class QuadratureError : public ConvergenceError {
 public:
  QuadratureError(const std::string& what, double value, double error_estimate)
      : ConvergenceError(what), value_(value), error_estimate_(error_estimate) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

/// A hypergeometric route was asked for an argument outside the window where
/// its series is considered reliable.
class SeriesWindowError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace hyperlaplace

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace manifold_landau {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite coordinates, wrong dimension, off-manifold points.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Curve data inconsistent with the manifold (e.g. velocity not tangent).
class InvalidCurve : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested outside the time span of a sampled curve.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Function evaluated at a point where it is not differentiable.
class Singularity : public Error {
 public:
  using Error::Error;
};

/// Hypotheses of the inequality fail on the curve, so it makes no claim.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A scanned quantity produced NaN.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, double t)
      : Error(what + " (t = " + std::to_string(t) + ")"), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

/// Rejected sampled-curve input. `row()` is the zero-based data row.
class IngestionError : public Error {
 public:
  IngestionError(const std::string& what, std::size_t row)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace manifold_landau

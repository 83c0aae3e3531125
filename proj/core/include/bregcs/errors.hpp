#pragma once

#include <stdexcept>
#include <string>

namespace bregcs {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector/matrix length disagreement.
struct DimensionError : Error {
  using Error::Error;
};

// Input outside the domain of the active potential (e.g. a nonpositive
// component handed to the positive-entropy functional).
struct DomainError : Error {
  using Error::Error;
};

// A hyperplane with a zero normal row.
struct InvalidHyperplaneError : Error {
  using Error::Error;
};

// No feasible point exists (positive-entropy projection onto a hyperplane
// that does not intersect the positive orthant).
struct InfeasibleError : Error {
  using Error::Error;
};

// The multiplier root solve ran out of iterations. Carries the best
// multiplier found and the constraint residual at that multiplier.
struct SolverFailureError : Error {
  SolverFailureError(const std::string& what, double multiplier_, double residual_)
      : Error(what), multiplier(multiplier_), residual(residual_) {}
  double multiplier;
  double residual;
};

// Measurement matrix is numerically rank deficient.
struct RankDeficiencyError : Error {
  RankDeficiencyError(const std::string& what, double condition_)
      : Error(what), condition(condition_) {}
  double condition;
};

// Bad configuration file or option value.
struct ConfigError : Error {
  using Error::Error;
};

// Filesystem / parse failure on data files.
struct IoError : Error {
  using Error::Error;
};

}  // namespace bregcs

#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <utility>

namespace beliefdyn {

// Root of the library's exception hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input matrix or profile violates a structural requirement.
struct ValidationError : Error {
  using Error::Error;
};

struct RowSumViolation : ValidationError {
  using ValidationError::ValidationError;
};

struct NonnegativityViolation : ValidationError {
  using ValidationError::ValidationError;
};

struct ZeroDiagonal : ValidationError {
  using ValidationError::ValidationError;
};

struct NotStronglyConnected : ValidationError {
  using ValidationError::ValidationError;
};

struct RowAbsSumViolation : ValidationError {
  using ValidationError::ValidationError;
};

struct NonpositiveDiagonal : ValidationError {
  using ValidationError::ValidationError;
};

struct EigenvalueModulusViolation : ValidationError {
  using ValidationError::ValidationError;
};

struct NonSemiSimpleUnitEigenvalue : ValidationError {
  using ValidationError::ValidationError;
};

struct PatternMismatch : ValidationError {
  using ValidationError::ValidationError;
};

// A caller broke an operation's stated precondition.
struct PreconditionViolation : Error {
  using Error::Error;
};

// Simulation hit the step budget before the residual streak completed.
struct MaxStepsExceeded : Error {
  MaxStepsExceeded(std::string msg, Eigen::VectorXd state, double res, long n)
      : Error(std::move(msg)), last_state(std::move(state)), residual(res), steps(n) {}
  Eigen::VectorXd last_state;
  double residual;
  long steps;
};

// The matrix power sequence did not settle within the squaring budget.
struct PowerLimitNonconvergent : Error {
  using Error::Error;
};

// An operation that needs a converged trajectory received an unconverged one.
struct NotConverged : Error {
  using Error::Error;
};

// A linear solve that must be nonsingular failed its residual check.
struct SingularSystem : Error {
  using Error::Error;
};

// A spectral radius certificate was requested but does not hold.
struct CertificateFailure : Error {
  CertificateFailure(std::string msg, double rho) : Error(std::move(msg)), radius(rho) {}
  double radius;
};

// Scenario generation ran out of resampling attempts.
struct GenerationExhausted : Error {
  using Error::Error;
};

// A config file is syntactically or structurally unreadable.
struct ParseError : Error {
  using Error::Error;
};

// A config parsed fine but its contents failed validation; wraps the
// underlying validation message with the offending field.
struct ConfigValidationError : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace beliefdyn

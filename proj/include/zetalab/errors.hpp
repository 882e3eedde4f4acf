#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetalab {

/// Caller passed a value outside an operation's precondition (N = 0, an
/// exterior point to a strip-only routine, an inverted range, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The O(N^2) cross-term oracle was asked for more pairs than the guard allows.
class CostGuardError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Mathematical domain failure: the requested value does not exist or cannot
/// be produced by the configured method.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// zeta at s = 1, or Gamma at a non-positive integer.
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

/// 1 - 2^{1-s} is (numerically) zero and the Euler-Maclaurin route is disabled.
class SingularFactorError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Acceleration could not reach the requested tolerance. Carries the best
/// value that was obtained and its error estimate.
class NonConvergenceError : public DomainError {
public:
  NonConvergenceError(const std::string& what, std::complex<double> best,
                      double estimate)
      : DomainError(what), best_value_(best), best_estimate_(estimate) {}

  std::complex<double> best_value() const noexcept { return best_value_; }
  double best_estimate() const noexcept { return best_estimate_; }

private:
  std::complex<double> best_value_;
  double best_estimate_;
};

/// An internal consistency check failed (e.g. Z(t) came out non-real).
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetalab

#pragma once

#include <stdexcept>
#include <string>

namespace altkurepa {

/// Argument outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on (or numerically at) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class ToleranceNotMet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative solver (bracketing, minimization) failed.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes disagree.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace altkurepa

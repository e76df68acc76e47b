#pragma once

#include <stdexcept>
#include <string>

namespace slitflow {

/// Raised when an argument lies outside the domain of a model function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a parameter record violates one of its invariants.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base class for numerical failures (non-convergence, step limits).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slitflow

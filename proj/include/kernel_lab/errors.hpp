#pragma once

#include <stdexcept>
#include <string>

namespace kernel_lab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a kernel singularity (x == y).
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Mismatched inputs, e.g. fields living on different boundary grids.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computational routes that must agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& what, double first, double second)
      : std::runtime_error(what), first_(first), second_(second) {}
  double first() const noexcept { return first_; }
  double second() const noexcept { return second_; }

 private:
  double first_;
  double second_;
};

/// Quadrature did not reach the requested tolerance within its budget.
/// Carries the best estimate obtained.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}
  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

}  // namespace kernel_lab

#pragma once

#include <stdexcept>
#include <string>

namespace pell {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An integration interval with lo >= hi.
class InvalidDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iteration or refinement hit its cap before meeting its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// An integrand produced NaN or infinity at an interior node.
class NonFinite : public Error {
 public:
  using Error::Error;
};

// A quantity that must be positive (e.g. a series denominator) was not.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace pell

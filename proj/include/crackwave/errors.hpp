#pragma once

#include <stdexcept>
#include <string>

namespace crackwave {

// Root of the library's exception tree. The CLI maps the subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a formula (e.g. sqrt of a negative).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly at a pole of a transform or kernel factor.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Parameters outside the sub-Rayleigh regime, or a kernel that is not positive.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Quadrature, root finding or a cross-check did not meet its contract.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace crackwave

#pragma once

#include <stdexcept>
#include <string>

namespace symsteer {

// Root of the library's exception hierarchy. The CLI maps each branch onto a
// fixed exit code (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed state-spec strings and command arguments.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Requested size exceeds a hard cap (register expansion, factorial oracle).
class SizeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Numerical failure or a result outside the physical domain.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double worst_residual)
      : NumericalError(what), worst_residual_(worst_residual) {}
  double worst_residual() const noexcept { return worst_residual_; }

 private:
  double worst_residual_;
};

// Complex GOmega spectra, spacelike top eigenvectors, negative R eigenvalues.
class NonPhysicalError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ScaleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularVolumeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateSteeringError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Operation is well posed but the input is outside its domain, e.g. asking
// for a three-spinor interconversion on a state with a repeated spinor.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace symsteer

#pragma once

#include <stdexcept>
#include <string>

namespace adiasearch {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base class for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StepUnderflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonFiniteError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// No sign change of the probability difference inside the search window.
class NoCrossingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The requested error model has no closed-form time bound.
class UnsupportedModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Problem too large for the dense full-space oracle.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace detail
}  // namespace adiasearch

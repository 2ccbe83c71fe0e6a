#pragma once

#include <stdexcept>

namespace pquant {

/// Bad argument: index out of range, wrong form degree, unsupported (k, p).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two values built over different ambient dimensions were combined.
class DimensionMismatch : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A graded formula divides by k + p and was asked to act on S^0_0.
class DegenerateGradeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The order of the zero operator is not defined.
class UndefinedOrderError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix basis whose Gram matrix is singular.
class InconsistentBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pquant

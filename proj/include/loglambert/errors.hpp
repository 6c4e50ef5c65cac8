#pragma once

#include <stdexcept>
#include <string>

namespace loglambert {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result not representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Iteration budget exhausted without meeting the tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point where the quantity has a vertical tangent or pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The singular-point equation has no (or an unexpected number of) real roots.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// Parameter region not covered by the branch catalog.
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

/// Series reversion is ill-conditioned at the expansion point.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Root bracket endpoints do not straddle the target.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not meet its tail or accuracy criterion.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace loglambert

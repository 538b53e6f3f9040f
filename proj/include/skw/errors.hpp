#pragma once

#include <stdexcept>
#include <string>

namespace skw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence is not a partition, or mu is not contained in lambda.
class InvalidShapeError : public Error {
 public:
  using Error::Error;
};

/// The operation needs mu strictly contained in lambda.
class EmptyShapeError : public Error {
 public:
  EmptyShapeError() : Error("skew shape is empty (lambda == mu)") {}
  using Error::Error;
};

class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

/// Matrix or rank dimensions do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a differential of a Schur complex does not have integral
/// coordinates in the standard basis. Always an internal consistency failure.
class NonIntegralCoordinatesError : public Error {
 public:
  using Error::Error;
};

class PrimeCollisionError : public Error {
 public:
  using Error::Error;
};

class NotAComplexError : public Error {
 public:
  using Error::Error;
};

class HypothesisViolatedError : public Error {
 public:
  using Error::Error;
};

class MissingGradeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace skw

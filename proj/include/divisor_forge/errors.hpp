#pragma once

#include <stdexcept>
#include <string>

namespace dforge {

// Base of every mathematical failure raised by the library. The CLI maps
// these to exit code 2, except DecompositionIncomplete and
// PrimalityUncertain which map to 3.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public MathError {
 public:
  RingMismatch() : MathError("objects live in different rings") {}
};

class DecompositionIncomplete : public MathError {
 public:
  using MathError::MathError;
};

class PrimalityUncertain : public MathError {
 public:
  using MathError::MathError;
};

// The ideal was decomposed and is definitely not prime.
class NotPrime : public MathError {
 public:
  using MathError::MathError;
};

class HeightNotOne : public MathError {
 public:
  using MathError::MathError;
};

class NonIntegralCoercion : public MathError {
 public:
  using MathError::MathError;
};

class NoSolution : public MathError {
 public:
  using MathError::MathError;
};

class NotCompleteIntersection : public MathError {
 public:
  using MathError::MathError;
};

class GradingError : public MathError {
 public:
  using MathError::MathError;
};

class FactorizationLimit : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace dforge

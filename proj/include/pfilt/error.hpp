#pragma once

#include <stdexcept>
#include <string>

namespace pfilt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class MismatchedSystem : public Error {
 public:
  MismatchedSystem() : Error("weights or characters belong to different root systems") {}
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// ch L(mu0) could not be determined (solver ambiguity and no table entry).
class SimpleCharUnavailable : public Error {
 public:
  using Error::Error;
};

/// A greedy elimination produced a negative leading coefficient. This is a
/// broken internal invariant, never an expected outcome.
class NegativeRemainder : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pfilt

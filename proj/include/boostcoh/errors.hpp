#pragma once

#include <stdexcept>
#include <string>

namespace boostcoh {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the physics is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A constructed value failed one of its type invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input is valid but leaves a quantity undetermined (e.g. a sign).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace boostcoh

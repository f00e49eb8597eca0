#pragma once

#include <stdexcept>
#include <string>

namespace orp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact arithmetic left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

// Vector/matrix sizes do not agree.
struct DimensionError : Error {
  using Error::Error;
};

// Malformed input text.
struct ParseError : Error {
  using Error::Error;
};

// Instance data violates a structural requirement (negative capacity,
// uncoverable row, not a permutation, ...).
struct InvalidInstanceError : Error {
  using Error::Error;
};

// A parent solution is not feasible for the instance it was paired with.
struct InfeasibleParentError : Error {
  using Error::Error;
};

// An enumeration guard was exceeded.
struct ResourceError : Error {
  using Error::Error;
};

// The instance does not match the solver's structural precondition.
struct SolverMismatchError : Error {
  using Error::Error;
};

}  // namespace orp

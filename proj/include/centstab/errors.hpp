#pragma once

#include <stdexcept>
#include <string>

namespace centstab {

// Base class for all workbench errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (partition strings, field specs, JSON documents).
struct ParseError : Error {
  using Error::Error;
};

// A shape violates the partition/weak-partition invariants.
struct ShapeError : Error {
  using Error::Error;
};

// Arithmetic between scalars or matrices of different fields.
struct FieldMismatchError : Error {
  using Error::Error;
};

// Bad field construction (composite modulus, unsupported spec).
struct FieldError : Error {
  using Error::Error;
};

// Dimension mismatches, inconsistent systems, and other linear-algebra
// contract violations.
struct LinalgError : Error {
  using Error::Error;
};

// An operation that needs a semisimple group algebra was called over F_p
// with p <= n.
struct SemisimplicityError : Error {
  using Error::Error;
};

// A sequence fed to the chain-complex builder fails the potential
// stability condition.
struct PotentialStabilityError : Error {
  using Error::Error;
};

// A claimed subrepresentation is not closed under the group action.
struct InvalidSubrepresentationError : Error {
  using Error::Error;
};

}  // namespace centstab

#pragma once

#include <stdexcept>
#include <string>

namespace ineqlab {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto exit codes with a single catch.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested construction is only valid in a parameter regime (e.g. the
// K-class representation of the kernel needs lambda <= 1).
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature failed to reach its tolerance or hit a non-finite value.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// The density form s has no stand-alone conjectured bound.
class UnsupportedFormError : public Error {
 public:
  using Error::Error;
};

// A transform between function forms is not defined for the given input.
class TransformError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ineqlab

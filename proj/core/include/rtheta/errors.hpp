#pragma once

#include <stdexcept>
#include <string>

namespace rtheta {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected ring parameter (chain-ring value, or not an element of S).
class InvalidThetaError : public Error {
 public:
  using Error::Error;
};

// A (u,t) pair that fails u^2 = 1 or u*t = t.
class InvalidPairError : public Error {
 public:
  using Error::Error;
};

// Generator tuple violating a canonical-form constraint, or an operation
// precondition violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// canonicalize() could not express a module in canonical form.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

// Enumeration request above the caller-supplied cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rtheta

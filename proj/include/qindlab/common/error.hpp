#pragma once

#include <stdexcept>
#include <string>

namespace qindlab {

// Base of every error raised by the library. Callers that only care about
// "did the request make sense" can catch this alone.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (wire mismatch, bad sizes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A numerical invariant (unitarity, normalization, eigen residual) failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The scheme's ciphertext is not of the form (r, f(k, r, x)).
class NoCoreDecomposition : public Error {
 public:
  explicit NoCoreDecomposition(const std::string& scheme)
      : Error("no core decomposition: " + scheme) {}
};

// An attack was asked to run against a scheme or game it does not apply to.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace qindlab

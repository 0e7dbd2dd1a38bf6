#pragma once

#include <stdexcept>
#include <string>

namespace csforge {

/// Base class for every error raised by the library. The C API maps the
/// concrete subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition or invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The seed pair handed to the encoder is not complementary.
class InvalidSeed : public Error {
 public:
  using Error::Error;
};

/// A size guard (enumeration, codebook, expansion depth) was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace csforge

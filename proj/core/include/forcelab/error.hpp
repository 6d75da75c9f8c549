#pragma once

#include <stdexcept>
#include <string>

namespace forcelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (edge lists, matrices, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size or search budget was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace forcelab

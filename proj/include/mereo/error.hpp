#pragma once

#include <stdexcept>
#include <string>

namespace mereo {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range point, non-carrier element, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation would exceed one of the configured caps.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a library bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mereo

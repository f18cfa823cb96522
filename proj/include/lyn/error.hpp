#pragma once

#include <stdexcept>
#include <string>

namespace lyn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad letters, positions, graph files).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration budget would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// An oracle disagreed with itself; signals a library bug, not a user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lyn

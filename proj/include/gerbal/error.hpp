#pragma once

#include <stdexcept>
#include <string>

namespace gerbal {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (tables, schemas, labels).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A request outside what the library supports (degree, size bounds).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace gerbal

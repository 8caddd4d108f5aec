#pragma once

#include <stdexcept>
#include <string>

namespace ctwin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument fell outside the range an operation accepts (index, level m,
/// cost guard).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two operands have incompatible sizes (matrix order, function arity).
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ctwin

#pragma once

#include <stdexcept>
#include <string>

namespace sixv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (range, size, distinctness).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size or combinatorial budget would be exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

/// Laurent expansion at the requested point is not well defined.
class ResidueError : public Error {
 public:
  using Error::Error;
};

/// Division by an exact zero, or by a float below the working precision.
class SingularError : public Error {
 public:
  using Error::Error;
};

}  // namespace sixv

#pragma once

#include <stdexcept>
#include <string>

namespace quasidim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A point was evaluated outside the sampled grid.
class OutOfGrid : public Error {
 public:
  using Error::Error;
};

/// A computed quantity broke a stated bound (norm, symmetry, injectivity).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (binary grid, config).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace quasidim

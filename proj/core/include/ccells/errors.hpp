#pragma once

#include <stdexcept>

namespace ccells {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on ground sets of different size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An element label outside 1..n, or outside the support where one is required.
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

/// Subset rank out of range or a malformed (unsorted, wrong size) subset.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Parameters violate an operation's domain (for instance n < r).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Integer result does not fit in 64 bits.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A point configuration is not in general position.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A checkpoint does not belong to the input it names.
class DigestMismatchError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccells

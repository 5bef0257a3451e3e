#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or input file. `position` is a 0-based byte
/// offset into the offending string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An input file or ring specification is invalid.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation exceeded its S-pair budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class NotArtinian : public Error {
 public:
  using Error::Error;
};

/// Randomized parameter-element search gave up.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A proposed system of parameters fails the dimension test.
class NotSystemOfParameters : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two independent computations that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace irlab

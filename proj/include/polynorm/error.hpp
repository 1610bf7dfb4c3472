#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polynorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial or rational text. position is a byte offset into the
// source, never past its end.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Vector length or variable count disagrees between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("zero polynomial is not a valid input") {}
};

// An argument violates a value precondition (non-integer functional,
// non-positive dilation, non-symmetric polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two independent computations that must agree did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polynorm

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projrefl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between numbers whose compositum is not a supported field.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar expression; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace projrefl

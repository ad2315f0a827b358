#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torres {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (PD text, representation files, mismatched sizes).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error with a byte offset into the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The representation admits no column with det(Phi(x_j) - I) != 0.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A postcondition the library guarantees was violated. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace torres

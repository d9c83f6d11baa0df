#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live on different sides (spatial vs frequency) or over different fields.
class DomainMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A result would need digits outside the configured exponent window.
class PrecisionOverflow : public Error {
 public:
  using Error::Error;
};

/// An enumeration, table or transform would exceed its configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `offset()` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace lf

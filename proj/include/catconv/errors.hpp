#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catconv {

/// Base of every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed UD-string or SignedSeq text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An input outside the domain of a map. `offending()` is the input in canonical form.
class DomainError : public Error {
 public:
  DomainError(const std::string& message, std::string offending)
      : Error(message + ": \"" + offending + "\""), offending_(std::move(offending)) {}

  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

/// Enumeration or grid size above the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what + " " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Exact arithmetic left the representable range (negative result, inexact
/// division, or a narrowing conversion).
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A verification mode the identity does not implement.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

}  // namespace catconv

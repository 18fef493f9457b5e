#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closure_lab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " variables, got " + std::to_string(got)) {}
};

// An instance exceeded one of the configured resource caps.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeds configured cap of " + std::to_string(cap)),
        cap_(cap) {}
  // Re-raises `inner` with a location prefix.
  CapExceeded(const std::string& context, const CapExceeded& inner)
      : Error(context + ": " + inner.what()), cap_(inner.cap()) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A computed identity failed to re-verify. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// line and column are 1-based; 0 means the error has no position.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(line == 0 ? message
                        : message + " (line " + std::to_string(line) +
                              ", column " + std::to_string(column) + ")"),
        message_(message),
        line_(line),
        column_(column) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace closure_lab

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mtrel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed network document. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a network invariant (loop, parallel arc,
/// probability outside [0,1], node id out of range).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message,
                           std::optional<std::size_t> arc = std::nullopt)
      : Error(message), arc_(arc) {}

  std::optional<std::size_t> arc() const noexcept { return arc_; }

 private:
  std::optional<std::size_t> arc_;
};

/// A size limit (node count, arc count) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtrel

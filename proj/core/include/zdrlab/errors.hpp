#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdrlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring-spec text. `position()` is the 0-based byte offset.
class SpecParseError : public Error {
 public:
  SpecParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Syntactically valid spec with invalid parameters (unknown catalog id,
/// non-prime-power field order, modulus < 2, ...).
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A catalog presentation failed its structure-constant or axiom checks.
class CatalogValidationError : public Error {
 public:
  using Error::Error;
};

/// The ring is an integral domain, so its zero-divisor graph has no vertices.
class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdrlab

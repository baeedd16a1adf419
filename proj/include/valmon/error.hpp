#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valmon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite series spec ran out of terms, or a truncation/derivation budget was hit.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Precondition violations: order mismatch, digit bounds, depth exceeded, zero inputs.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInMonoid : public Error {
 public:
  using Error::Error;
};

/// Raised by self checks; means a bug, never a property of valid input.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

class IncompleteBasis : public Error {
 public:
  using Error::Error;
};

/// A computation produced something the theory rules out (a bug).
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace valmon

#pragma once

#include <stdexcept>
#include <string>

namespace fproot {

// Base for everything a caller can trigger with well-formed but bad input.
// The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Operands belong to different ring contexts.
class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// q is not a power of the context characteristic.
class BadPower : public DomainError {
 public:
  using DomainError::DomainError;
};

// Monomial exponent or integer arithmetic would overflow; never wraps.
class ExponentOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};

// q (or a derived quantity) exceeds the configured cap.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fproot

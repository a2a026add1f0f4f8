#pragma once

#include <stdexcept>
#include <string>

namespace msym {

/// Operands live in different ambients (n, m or coefficient ring differ).
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A basis index of weight > n was requested in a finite ambient without
/// opting into truncation. Distinct from malformed input.
class VanishingIndex : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msym

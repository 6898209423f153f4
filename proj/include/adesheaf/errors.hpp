// errors.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace ade {

/// Malformed or out-of-range input supplied by a caller.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A request that is well-formed but outside the modeled scope.
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. Always a bug, never clamped away.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ade

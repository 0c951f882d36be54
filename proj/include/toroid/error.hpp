#pragma once

#include <stdexcept>
#include <string>

namespace toroid {

// Precondition violated by the caller (bad radii, zero leading coefficient, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A construction collapsed to a zero vector or a singular matrix.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toroid

#pragma once

#include <stdexcept>
#include <string>

namespace g2f {

// Bad user-supplied data (files, CLI arguments, malformed scalars).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : std::domain_error {
  DivisionByZeroError() : std::domain_error("division by zero") {}
};

// A request that would leave the exact-arithmetic domain (e.g. a square
// root that is not rational).
struct ExactnessError : std::runtime_error {
  explicit ExactnessError(const std::string& what) : std::runtime_error(what) {}
};

// The defining functional of the level set vanished at a point.
struct SingularPointError : std::runtime_error {
  explicit SingularPointError(const std::string& what)
      : std::runtime_error(what) {}
};

// Two independent computations disagreed; the result cannot be trusted.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace g2f

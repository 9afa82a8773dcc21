#pragma once

#include <stdexcept>
#include <string>

namespace evokit {

// Invalid input or a violated precondition (bad file, non-idempotent
// algebra, zero scalar where a unit is required, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (dimension, modulus, group order).
class CapExceeded : public DomainError {
 public:
  explicit CapExceeded(const std::string& what) : DomainError(what) {}
};

// A structural invariant that should be unreachable was violated.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace evokit

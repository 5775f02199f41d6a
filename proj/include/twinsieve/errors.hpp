#pragma once

#include <stdexcept>

namespace twinsieve {

// Arithmetic left the supported exact integer width.  Nothing in this
// library wraps silently; anything past 128 bits raises this instead.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable resource guard (scan modulus, term budget, subset size)
// refused to start a computation that would be too large.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs are well formed but outside an operation's documented domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twinsieve

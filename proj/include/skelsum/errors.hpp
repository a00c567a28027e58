#pragma once

#include <stdexcept>

namespace skelsum {

// Argument errors use std::invalid_argument directly.

/// A mathematical precondition of an operation does not hold for otherwise
/// well-formed input (e.g. the target point lies outside the polytope).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result that must exist mathematically could not be produced. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skelsum

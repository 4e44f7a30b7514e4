#pragma once

#include <stdexcept>
#include <string>

namespace opplab {

/// Malformed or out-of-contract input (mixed window sizes, singular matrices
/// where a group element is required, bad parameter counts, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two computations that must agree did not. Always an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace opplab

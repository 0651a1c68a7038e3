#pragma once

#include <stdexcept>
#include <string>

namespace loghodge {

/// Malformed user input: bad files, bad flags, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request needs graded data beyond the degree an algebra was built to.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (for instance d∘d != 0). Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace loghodge

#pragma once

#include <stdexcept>
#include <string>

namespace isocompat {

/// Operands of incompatible dimension (vectors, matrices, specs).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation has no meaning for this group family or element shape.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that violates a documented invariant (non-orthogonal matrix, off-sheet point, ...).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_dims(long expected, long actual, const char* what) {
  if (expected != actual) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(actual));
  }
}

}  // namespace isocompat

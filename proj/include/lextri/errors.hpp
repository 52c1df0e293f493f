#pragma once

#include <stdexcept>
#include <string>

namespace lextri {

// Thrown when an operation requires a full-dimensional point subset.
struct DegenerateSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A full script failed to produce simplices (indicates an internal bug).
struct NotSimplicialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive height search exceeded its doubling bound.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full enumeration was requested beyond the configured script budget.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid point set (duplicates, degenerate dimension, bad sizes).
struct PointSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RecoverFailure { NoCandidate, VerificationFailed, NotSimplicial };

const char* to_string(RecoverFailure f);

// Greedy recovery failed: the input is not the GKZ-vector of a
// lexicographic triangulation of the given point set.
struct RecoverError : std::runtime_error {
  RecoverFailure reason;
  explicit RecoverError(RecoverFailure r)
      : std::runtime_error(std::string("recover failed: ") + lextri::to_string(r)),
        reason(r) {}
};

}  // namespace lextri

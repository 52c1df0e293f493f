#pragma once

#include "lextri/gkz.hpp"

namespace lextri {

struct RecoveryStep {
  Label label;
  Sign sign;
  std::size_t cell_count;  // subdivision size after the step
};

struct RecoveryResult {
  LexScript script;
  Triangulation triangulation;
  std::vector<RecoveryStep> steps;
};

// Greedy recovery of a lexicographic triangulation from its GKZ-vector:
// starting from the trivial subdivision, repeatedly pull/push a candidate
// among the unprocessed labels (lowest label first, Pull preferred), then
// verify the result reproduces z exactly. Throws RecoverError when the
// input is not the GKZ-vector of a lexicographic triangulation.
RecoveryResult recover(const PointSet& v, const GKZVector& z);

// validate(t) holds and gkz_vector(t) == z.
bool verify(const PointSet& v, const GKZVector& z, const Triangulation& t);

}  // namespace lextri

#pragma once

#include "lextri/linalg.hpp"
#include "lextri/types.hpp"

#include <vector>

namespace lextri {

struct LinearConstraint {
  Vec coeffs;
  Rational rhs;
};

enum class SimplexStatus { Optimal, Unbounded, Infeasible };

struct SimplexResult {
  SimplexStatus status;
  Rational objective;
  Vec solution;
};

// maximize objective.x subject to eq.x = rhs and leq.x <= rhs, x free.
// Exact-rational two-phase simplex with Bland's rule.
SimplexResult simplex_maximize(const Vec& objective,
                               const std::vector<LinearConstraint>& eq,
                               const std::vector<LinearConstraint>& leq);

// Decides existence of x with eq.x = rhs, weak.x <= rhs, strict.x < rhs via
// the max-eps reformulation (strict rows become .x <= rhs - eps, eps <= 1,
// maximize eps); true iff the optimum eps is positive. An unbounded eps is
// treated as feasible.
bool lp_feasible_strict(const std::vector<LinearConstraint>& eq,
                        const std::vector<LinearConstraint>& weak,
                        const std::vector<LinearConstraint>& strict);

}  // namespace lextri

#pragma once

#include <vector>

#include "planeforge/rational.hpp"

namespace planeforge::lp {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> x;  // a basic feasible point when feasible
};

/// Decides whether {x >= 0 : A x = b} is nonempty, exactly.
///
/// Phase-1 simplex on the artificial problem min sum(artificials) with
/// Bland's rule, so the method terminates without any tolerance knobs.
FeasibilityResult solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace planeforge::lp

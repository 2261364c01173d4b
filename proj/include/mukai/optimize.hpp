#pragma once

// Exact linear programming.

#include <vector>

#include "mukai/exactmath.hpp"
#include "mukai/polyhedra.hpp"

namespace mukai {

/// maximize <objective, x> over `feasible`.
struct LinearProgram {
  RatVector objective;
  Polytope feasible;
};

struct LpSolution {
  Rational value;
  RatVector argmax;
  bool vertex_witness = true;
};

/// Exhaustive vertex scan. Ties go to the lexicographically smallest
/// optimal vertex. Throws Error(Infeasible) or Error(Unbounded).
LpSolution solve(const LinearProgram& lp);

/// maximize <c, a> subject to A a = b, a >= 0, by a two-phase tableau
/// simplex with Bland's rule (deterministic pivoting, exact arithmetic).
LpSolution simplex_standard_form(const RatMatrix& a, const RatVector& b, const RatVector& c);

/// maximize sum(a) subject to sum_i a_i * generators[i] == target, a >= 0.
/// Throws Error(Infeasible) when target is outside cone(generators).
LpSolution solve_equality_form(const std::vector<IntVector>& generators, const IntVector& target);

}  // namespace mukai

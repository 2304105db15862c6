#pragma once

#include <vector>

#include "satake/linalg.hpp"

namespace satake {

// Exact rational linear programming on a dense tableau: two-phase simplex
// with Bland's rule (anti-cycling, guaranteed termination).  Intended for
// the small programs arising from weight polytopes — every pivot is exact,
// nothing is conditioned or scaled.

enum class LpRel { Le, Ge, Eq };

struct LpConstraint {
    RatVec a;          // coefficients over the n structural variables
    LpRel rel = LpRel::Le;
    Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Optimal;
    Rational value; // optimal objective, when Optimal
    RatVec point;   // an optimal vertex, when Optimal
    RatVec ray;     // improving recession direction, when Unbounded
};

// maximize c.x subject to the constraints; x ranges over all of R^n
// (variables are split internally, so no sign restriction).
LpResult lp_maximize(const RatVec& c, const std::vector<LpConstraint>& cons, int n);

} // namespace satake

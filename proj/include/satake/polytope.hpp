#pragma once

#include <vector>

#include "satake/lp.hpp"

namespace satake {

// Exact vertex enumeration for small polyhedra given by rational constraints.
// A vertex is a feasible point where some n linearly independent constraints
// (equalities plus tight inequalities) meet.  All candidate square systems
// are solved exactly, so the result is the precise vertex set of the feasible
// region; for unbounded regions this is the vertex set of the recession-free
// part only, which callers must rule out themselves.
//
// Intended for the low-dimensional slice polytopes of this library (n <= 12,
// a few dozen constraints); the combinatorial enumeration is exponential and
// guarded accordingly.
std::vector<RatVec> polytope_vertices(const std::vector<LpConstraint>& cons, int n);

// Volume of the convex hull of the given vertices, which must lie on a common
// hyperplane {l(x) = 1} through which the origin's cone sweeps them: returns
// d/ds Vol{x : x in cone(vertices), l(x) <= s} at s = 1, the "slab" measure
// of the slice.  For a simplex with vertex matrix V (columns are the d
// vertices in R^d) this is |det V| / (d-1)!.  A 0-dimensional slice (single
// vertex) has measure 1 by convention.
double cone_slab_volume(const std::vector<RatVec>& vertices);

} // namespace satake

#pragma once

#include <cstddef>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>; // row-major, rectangular

RatVec rat_vec(std::initializer_list<long long> v);
Rational dot(const RatVec& a, const RatVec& b);
RatVec mat_vec(const RatMat& m, const RatVec& x);

// In-place reduced row echelon form (Gauss-Jordan, exact).  Returns the rank;
// zero rows are moved to the bottom.  The result is the canonical RREF, so two
// row spans are equal iff their nonzero RREF rows agree.
int rref(RatMat& m);

int rank_of(RatMat m);

// Determinant of a square matrix (fraction-free would be overkill at these sizes).
Rational determinant(RatMat m);

// Canonical basis of { x : row . x = 0 for every row } in Q^dim.
// Rows may be empty, in which case the kernel is all of Q^dim.
RatMat kernel_of_rows(const RatMat& rows, int dim);

// A linear subspace of Q^n held in canonical form: the RREF basis of its span.
// Canonicality makes equality and printing deterministic.
struct RationalSubspace {
    int ambient_dim = 0;
    RatMat basis; // RREF rows, no zero rows

    static RationalSubspace from_spanning(RatMat rows, int dim);
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const RatVec& v) const;
    bool contains(const RationalSubspace& other) const;
    bool operator==(const RationalSubspace& other) const = default;
};

} // namespace satake

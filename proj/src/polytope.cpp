#include "satake/polytope.hpp"

#include <algorithm>

#include "satake/errors.hpp"
#include "satake/linalg.hpp"

namespace satake {

namespace {

// Exact feasibility of a point against one constraint.
bool satisfies(const LpConstraint& con, const RatVec& x) {
    const Rational lhs = dot(con.a, x);
    switch (con.rel) {
    case LpRel::Le: return lhs <= con.rhs;
    case LpRel::Ge: return lhs >= con.rhs;
    case LpRel::Eq: return lhs == con.rhs;
    }
    return false;
}

} // namespace

std::vector<RatVec> polytope_vertices(const std::vector<LpConstraint>& cons, int n) {
    if (n < 1 || n > 12) throw ValidationError("vertex enumeration supports 1 <= n <= 12");
    for (const auto& con : cons)
        if (static_cast<int>(con.a.size()) != n)
            throw ValidationError("constraint dimension mismatch in vertex enumeration");

    std::vector<const LpConstraint*> eqs, ineqs;
    for (const auto& con : cons)
        (con.rel == LpRel::Eq ? eqs : ineqs).push_back(&con);

    RatMat eq_rows;
    for (const auto* con : eqs) eq_rows.push_back(con->a);
    const int eq_rank = eq_rows.empty() ? 0 : rank_of(eq_rows);
    const int need = n - eq_rank;
    if (need < 0) throw InternalError("equality system rank exceeds the dimension");

    const int m = static_cast<int>(ineqs.size());
    if (need > m) return {};

    // Guard the combinatorial blow-up: C(m, need) stays small for the slice
    // polytopes this library builds.
    double combos = 1.0;
    for (int i = 0; i < need; ++i) combos *= double(m - i) / double(i + 1);
    if (combos > 2e6) throw ValidationError("vertex enumeration would exceed the candidate budget");

    std::vector<RatVec> vertices;
    std::vector<int> pick(need);
    for (int i = 0; i < need; ++i) pick[i] = i;
    for (;;) {
        // Solve the square-ish system: equalities plus the picked tight rows.
        RatMat aug;
        for (const auto* con : eqs) {
            RatVec row = con->a;
            row.push_back(con->rhs);
            aug.push_back(std::move(row));
        }
        for (int i = 0; i < need; ++i) {
            RatVec row = ineqs[pick[i]]->a;
            row.push_back(ineqs[pick[i]]->rhs);
            aug.push_back(std::move(row));
        }
        const int r = rref(aug);
        // Unique solution iff the coefficient part has rank n and the system
        // is consistent (no pivot in the rhs column).
        bool unique = (r == n);
        for (int row = 0; unique && row < static_cast<int>(aug.size()); ++row) {
            bool zero_coeffs = true;
            for (int col = 0; col < n; ++col)
                if (aug[row][col] != 0) { zero_coeffs = false; break; }
            if (zero_coeffs && aug[row][n] != 0) unique = false;
        }
        if (unique) {
            RatVec x(n);
            for (int row = 0; row < n; ++row) {
                int pivot = -1;
                for (int col = 0; col < n; ++col)
                    if (aug[row][col] != 0) { pivot = col; break; }
                if (pivot >= 0) x[pivot] = aug[row][n];
            }
            bool feasible = true;
            for (const auto& con : cons)
                if (!satisfies(con, x)) { feasible = false; break; }
            if (feasible) vertices.push_back(std::move(x));
        }

        if (need == 0) break;
        int i = need - 1;
        while (i >= 0 && pick[i] == m - need + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

double cone_slab_volume(const std::vector<RatVec>& vertices) {
    if (vertices.empty()) throw InternalError("slab volume of an empty vertex set");
    if (vertices.size() == 1) return 1.0; // 0-dimensional slice convention

    const int d = static_cast<int>(vertices[0].size());
    if (static_cast<int>(vertices.size()) != d)
        throw InternalError("slice polytope is not a simplex; unexpected vertex count");

    RatMat mat(d, RatVec(d));
    for (int col = 0; col < d; ++col) {
        if (static_cast<int>(vertices[col].size()) != d)
            throw InternalError("inconsistent vertex dimensions in slab volume");
        for (int row = 0; row < d; ++row) mat[row][col] = vertices[col][row];
    }
    Rational det = determinant(mat);
    if (det < 0) det = -det;
    double fact = 1.0;
    for (int i = 2; i < d; ++i) fact *= i;
    return to_double(det) / fact;
}

} // namespace satake

#include "satake/linalg.hpp"

#include <algorithm>

namespace satake {

RatVec rat_vec(std::initializer_list<long long> v) {
    RatVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InternalError("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec mat_vec(const RatMat& m, const RatVec& x) {
    RatVec out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, x));
    return out;
}

int rref(RatMat& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const Rational inv = 1 / m[pivot_row][col];
        for (auto& v : m[pivot_row]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

int rank_of(RatMat m) { return rref(m); }

Rational determinant(RatMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InternalError("determinant: matrix not square");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

RatMat kernel_of_rows(const RatMat& rows, int dim) {
    RatMat m = rows;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != dim) throw InternalError("kernel_of_rows: bad row length");
    const int r = rref(m);
    // Locate pivot columns of the reduced system.
    std::vector<int> pivot_col(r, -1);
    std::vector<bool> is_pivot(dim, false);
    for (int i = 0; i < r; ++i) {
        for (int c = 0; c < dim; ++c) {
            if (m[i][c] != 0) {
                pivot_col[i] = c;
                is_pivot[c] = true;
                break;
            }
        }
    }
    RatMat basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(dim, Rational(0));
        v[free] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    rref(basis); // canonical form (already independent; this just normalizes)
    return basis;
}

RationalSubspace RationalSubspace::from_spanning(RatMat rows, int dim) {
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != dim) throw InternalError("RationalSubspace: bad row length");
    const int r = rref(rows);
    rows.resize(r);
    return RationalSubspace{dim, std::move(rows)};
}

bool RationalSubspace::contains(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim) throw InternalError("contains: dimension mismatch");
    RatMat m = basis;
    m.push_back(v);
    return rank_of(std::move(m)) == dim();
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
    if (ambient_dim != other.ambient_dim) throw InternalError("contains: ambient mismatch");
    for (const auto& row : other.basis)
        if (!contains(row)) return false;
    return true;
}

} // namespace satake

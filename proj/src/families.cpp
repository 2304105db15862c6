#include "satake/families.hpp"

#include <cmath>
#include <cstdlib>

#include "satake/errors.hpp"

namespace satake {

int PointFamily::ambient_dim() const {
    switch (kind) {
    case FamilyKind::Quadric: return p + q;
    case FamilyKind::Detsurface: return n * n;
    case FamilyKind::Symmat: return n * (n + 1) / 2;
    }
    return 0;
}

PointFamily make_quadric(int p, int q, long long k, NormKind norm) {
    if (p < 1 || q < 1) throw ValidationError("quadric signature needs p >= 1 and q >= 1");
    if (k == 0) throw ValidationError("quadric level k must be nonzero");
    PointFamily fam;
    fam.kind = FamilyKind::Quadric;
    fam.p = p;
    fam.q = q;
    fam.n = 0;
    fam.k = k;
    fam.norm = norm;
    return fam;
}

PointFamily make_detsurface(int n, long long k, NormKind norm) {
    if (n < 2) throw ValidationError("determinant surface needs n >= 2");
    if (k == 0) throw ValidationError("determinant level k must be nonzero");
    PointFamily fam;
    fam.kind = FamilyKind::Detsurface;
    fam.n = n;
    fam.k = k;
    fam.norm = norm;
    return fam;
}

PointFamily make_symmat(int p, int q, NormKind norm) {
    if (p < 0 || q < 0 || p + q < 2)
        throw ValidationError("symmat signature needs p, q >= 0 with p + q >= 2");
    PointFamily fam;
    fam.kind = FamilyKind::Symmat;
    fam.p = p;
    fam.q = q;
    fam.n = p + q;
    fam.k = (q % 2 == 0) ? 1 : -1; // det = (-1)^q
    fam.norm = norm;
    return fam;
}

std::string family_label(const PointFamily& fam) {
    switch (fam.kind) {
    case FamilyKind::Quadric:
        return "quadric:" + std::to_string(fam.p) + "," + std::to_string(fam.q) + "," +
               std::to_string(fam.k);
    case FamilyKind::Detsurface:
        return "detsurface:" + std::to_string(fam.n) + "," + std::to_string(fam.k);
    case FamilyKind::Symmat:
        return "symmat:" + std::to_string(fam.p) + "," + std::to_string(fam.q);
    }
    return "?";
}

namespace {

// Entries of the symmetric matrix from the packed upper triangle.
long long sym_entry(const std::vector<long long>& x, int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // Row i starts after rows 0..i-1, which hold n, n-1, ... entries.
    const int offset = i * n - i * (i - 1) / 2;
    return x[offset + (j - i)];
}

// Exact integer determinant by Laplace expansion over the first row; sizes
// here are tiny (n <= 6).
long long det_int(const std::vector<std::vector<long long>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    long long det = 0;
    for (int col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == col) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        const long long term = m[0][col] * det_int(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

// Characteristic polynomial coefficients of a symmetric integer matrix by
// Faddeev-LeVerrier (exact: every division is by an integer that divides).
// Returns c of degree n with det(xI - A) = sum c[i] x^i, c[n] = 1.
std::vector<long long> char_poly(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    std::vector<long long> c(n + 1, 0);
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        // M <- A * M + c_{n-k+1} I ; c_{n-k} = -tr(A*M)/k
        std::vector<std::vector<long long>> am(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long s = 0;
                for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                am[i][j] = s;
            }
        for (int i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        long long tr = 0;
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int l = 0; l < n; ++l) s += a[i][l] * am[l][i];
            tr += s;
        }
        c[n - k] = -tr / k;
        m = am;
    }
    return c;
}

// Descartes sign changes; exact root-sign counting for char polys of
// symmetric matrices (all roots real).
int sign_changes(const std::vector<long long>& c) {
    int changes = 0, prev = 0;
    for (long long v : c) {
        if (v == 0) continue;
        const int s = v > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

bool on_family(const PointFamily& fam, const std::vector<long long>& x) {
    if (static_cast<int>(x.size()) != fam.ambient_dim())
        throw ValidationError("point dimension does not match the family");
    switch (fam.kind) {
    case FamilyKind::Quadric: {
        long long s = 0;
        for (int i = 0; i < fam.p; ++i) s += x[i] * x[i];
        for (int i = fam.p; i < fam.p + fam.q; ++i) s -= x[i] * x[i];
        return s == fam.k;
    }
    case FamilyKind::Detsurface: {
        std::vector<std::vector<long long>> m(fam.n, std::vector<long long>(fam.n));
        for (int i = 0; i < fam.n; ++i)
            for (int j = 0; j < fam.n; ++j) m[i][j] = x[i * fam.n + j];
        return det_int(m) == fam.k;
    }
    case FamilyKind::Symmat: {
        std::vector<std::vector<long long>> m(fam.n, std::vector<long long>(fam.n));
        for (int i = 0; i < fam.n; ++i)
            for (int j = 0; j < fam.n; ++j) m[i][j] = sym_entry(x, fam.n, i, j);
        if (det_int(m) != fam.k) return false;
        // Signature via Descartes on the characteristic polynomial: the roots
        // are real and nonzero (|det| = 1), so the counts are exact.
        const auto c = char_poly(m);
        const int pos = sign_changes(c);
        auto cneg = c;
        for (int i = 0; i <= fam.n; ++i)
            if (i % 2 == 1) cneg[i] = -cneg[i];
        const int neg = sign_changes(cneg);
        return pos == fam.p && neg == fam.q;
    }
    }
    return false;
}

long long norm2_int(const PointFamily& fam, const std::vector<long long>& x) {
    if (static_cast<int>(x.size()) != fam.ambient_dim())
        throw ValidationError("point dimension does not match the family");
    if (fam.norm == NormKind::Sup) {
        long long m = 0;
        for (long long v : x) m = std::max(m, std::llabs(v));
        return m * m;
    }
    long long s = 0;
    if (fam.kind == FamilyKind::Symmat) {
        int idx = 0;
        for (int i = 0; i < fam.n; ++i)
            for (int j = i; j < fam.n; ++j, ++idx)
                s += (i == j ? 1 : 2) * x[idx] * x[idx];
    } else {
        for (long long v : x) s += v * v;
    }
    return s;
}

double norm_of(const PointFamily& fam, const std::vector<long long>& x) {
    return std::sqrt(static_cast<double>(norm2_int(fam, x)));
}

} // namespace satake

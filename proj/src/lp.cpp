#include "satake/lp.hpp"

#include <cstddef>
#include <utility>

#include "satake/errors.hpp"

namespace satake {
namespace {

// Dense tableau.  Columns: the n structural variables split into positive
// and negative parts (x_k = col 2k - col 2k+1), then slack/surplus columns,
// then artificials; one extra column holds the basic values.
struct Tableau {
    std::vector<RatVec> rows;
    std::vector<int> basis; // basis[i] = column basic in row i
    int ncols = 0;

    int nrows() const { return static_cast<int>(rows.size()); }
    Rational& at(int i, int j) { return rows[i][j]; }
    Rational& rhs(int i) { return rows[i][ncols]; }

    void pivot(int prow, int pcol) {
        const Rational piv = at(prow, pcol);
        for (auto& v : rows[prow]) v /= piv;
        for (int i = 0; i < nrows(); ++i) {
            if (i == prow) continue;
            const Rational f = at(i, pcol);
            if (f == 0) continue;
            for (int j = 0; j <= ncols; ++j) at(i, j) -= f * rows[prow][j];
        }
        basis[prow] = pcol;
    }
};

enum class RunOutcome { Optimal, Unbounded };

// maximize cost.x on the current tableau.  Bland's rule on both the entering
// column (smallest improving index) and the leaving row (smallest basic
// index among the ratio-test ties), so cycling is impossible.  Columns with
// allowed[j] == 0 never enter.
RunOutcome run_simplex(Tableau& t, const RatVec& cost, const std::vector<char>& allowed,
                       int* unbounded_col) {
    for (;;) {
        const int m = t.nrows();
        std::vector<char> is_basic(t.ncols, 0);
        for (int i = 0; i < m; ++i) is_basic[t.basis[i]] = 1;

        int enter = -1;
        for (int j = 0; j < t.ncols && enter < 0; ++j) {
            if (!allowed[j] || is_basic[j]) continue;
            Rational r = cost[j];
            for (int i = 0; i < m; ++i) {
                const Rational& cb = cost[t.basis[i]];
                if (cb != 0) r -= cb * t.at(i, j);
            }
            if (r > 0) enter = j;
        }
        if (enter < 0) return RunOutcome::Optimal;

        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t.at(i, enter) <= 0) continue;
            const Rational ratio = t.rhs(i) / t.at(i, enter);
            if (leave < 0 || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            if (unbounded_col) *unbounded_col = enter;
            return RunOutcome::Unbounded;
        }
        t.pivot(leave, enter);
    }
}

} // namespace

LpResult lp_maximize(const RatVec& c, const std::vector<LpConstraint>& cons, int n) {
    if (n <= 0) throw ValidationError("lp_maximize: need at least one variable");
    if (static_cast<int>(c.size()) != n)
        throw ValidationError("lp_maximize: objective has wrong dimension");
    for (const auto& con : cons)
        if (static_cast<int>(con.a.size()) != n)
            throw ValidationError("lp_maximize: constraint has wrong dimension");

    // Normalize every row to a nonnegative right-hand side.
    struct RowSpec {
        RatVec a;
        LpRel rel;
        Rational rhs;
    };
    std::vector<RowSpec> rowspec;
    rowspec.reserve(cons.size());
    for (const auto& con : cons) {
        RowSpec r{con.a, con.rel, con.rhs};
        if (r.rhs < 0) {
            for (auto& v : r.a) v = -v;
            r.rhs = -r.rhs;
            if (r.rel == LpRel::Le) r.rel = LpRel::Ge;
            else if (r.rel == LpRel::Ge) r.rel = LpRel::Le;
        }
        rowspec.push_back(std::move(r));
    }

    const int m = static_cast<int>(rowspec.size());
    const int nsplit = 2 * n;
    int nslack = 0, nart = 0;
    for (const auto& r : rowspec) {
        if (r.rel != LpRel::Eq) ++nslack;
        if (r.rel != LpRel::Le) ++nart;
    }

    Tableau t;
    t.ncols = nsplit + nslack + nart;
    t.rows.assign(m, RatVec(t.ncols + 1, Rational(0)));
    t.basis.assign(m, -1);

    const int art_begin = nsplit + nslack;
    int slack_at = nsplit;
    int art_at = art_begin;
    for (int i = 0; i < m; ++i) {
        const auto& r = rowspec[i];
        for (int k = 0; k < n; ++k) {
            t.at(i, 2 * k) = r.a[k];
            t.at(i, 2 * k + 1) = -r.a[k];
        }
        t.rhs(i) = r.rhs;
        switch (r.rel) {
        case LpRel::Le:
            t.at(i, slack_at) = 1;
            t.basis[i] = slack_at++;
            break;
        case LpRel::Ge:
            t.at(i, slack_at++) = -1; // surplus
            t.at(i, art_at) = 1;
            t.basis[i] = art_at++;
            break;
        case LpRel::Eq:
            t.at(i, art_at) = 1;
            t.basis[i] = art_at++;
            break;
        }
    }

    std::vector<char> allowed(t.ncols, 1);
    if (nart > 0) {
        // Phase one: drive the sum of artificials to zero.
        RatVec phase1(t.ncols, Rational(0));
        for (int j = art_begin; j < t.ncols; ++j) phase1[j] = -1;
        if (run_simplex(t, phase1, allowed, nullptr) != RunOutcome::Optimal)
            throw InternalError("lp_maximize: phase one cannot be unbounded");
        Rational infeas = 0;
        for (int i = 0; i < t.nrows(); ++i)
            if (t.basis[i] >= art_begin) infeas += t.rhs(i);
        if (infeas != 0) return {LpStatus::Infeasible, {}, {}, {}};
        // Pivot zero-valued artificials out; rows that cannot pivot are
        // linearly dependent and dropped.
        for (int i = t.nrows() - 1; i >= 0; --i) {
            if (t.basis[i] < art_begin) continue;
            int pcol = -1;
            for (int j = 0; j < art_begin && pcol < 0; ++j)
                if (t.at(i, j) != 0) pcol = j;
            if (pcol >= 0) {
                t.pivot(i, pcol);
            } else {
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
        for (int j = art_begin; j < t.ncols; ++j) allowed[j] = 0;
    }

    RatVec cost(t.ncols, Rational(0));
    for (int k = 0; k < n; ++k) {
        cost[2 * k] = c[k];
        cost[2 * k + 1] = -c[k];
    }
    int unb_col = -1;
    if (run_simplex(t, cost, allowed, &unb_col) == RunOutcome::Unbounded) {
        // Improving direction: +1 on the entering column, minus the tableau
        // column on the basic variables, folded back onto x = pos - neg.
        RatVec dsplit(t.ncols, Rational(0));
        dsplit[unb_col] = 1;
        for (int i = 0; i < t.nrows(); ++i) dsplit[t.basis[i]] = -t.at(i, unb_col);
        RatVec ray(n, Rational(0));
        for (int k = 0; k < n; ++k) ray[k] = dsplit[2 * k] - dsplit[2 * k + 1];
        return {LpStatus::Unbounded, {}, {}, std::move(ray)};
    }

    RatVec xsplit(t.ncols, Rational(0));
    for (int i = 0; i < t.nrows(); ++i) xsplit[t.basis[i]] = t.rhs(i);
    RatVec point(n, Rational(0));
    Rational value = 0;
    for (int k = 0; k < n; ++k) {
        point[k] = xsplit[2 * k] - xsplit[2 * k + 1];
        value += c[k] * point[k];
    }
    return {LpStatus::Optimal, std::move(value), std::move(point), {}};
}

} // namespace satake

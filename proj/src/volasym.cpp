#include "satake/volasym.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "satake/errors.hpp"
#include "satake/polytope.hpp"

namespace satake {

namespace {

int target_dim(const ExpMapSpec& spec) {
    return spec.terms.empty() ? 0 : static_cast<int>(spec.terms[0].w.size());
}

double smallest_singular_value(const ExpMapSpec& spec, const std::vector<int>& keep) {
    const int d = target_dim(spec);
    Eigen::MatrixXd m(d, static_cast<int>(keep.size()));
    for (int c = 0; c < static_cast<int>(keep.size()); ++c)
        for (int r = 0; r < d; ++r) m(r, c) = spec.terms[keep[c]].w[r];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

double largest_singular_value(const ExpMapSpec& spec, const std::vector<int>& keep) {
    const int d = target_dim(spec);
    Eigen::MatrixXd m(d, static_cast<int>(keep.size()));
    for (int c = 0; c < static_cast<int>(keep.size()); ++c)
        for (int r = 0; r < d; ++r) m(r, c) = spec.terms[keep[c]].w[r];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

std::vector<int> all_indices(const ExpMapSpec& spec) {
    std::vector<int> idx(spec.terms.size());
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) idx[i] = i;
    return idx;
}

std::vector<double> coords_double(const Weight& w) {
    std::vector<double> out(w.coords.size());
    for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = to_double(w.coords[i]);
    return out;
}

// Stable log(sinh x) and log(cosh x) on the closed half-line.
double log_sinh(double x) {
    if (x <= 0.0) return -HUGE_VAL;
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

double log_cosh(double x) {
    return x + std::log1p(std::exp(-2.0 * x)) - M_LN2;
}

double sphere_area(int d) {
    // Surface measure of S^{d-1} in R^d.
    return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

} // namespace

void validate_spec(const ExpMapSpec& spec) {
    if (spec.rank < 1) throw ValidationError("spec rank must be positive");
    if (spec.terms.empty()) throw ValidationError("spec needs at least one term");
    if (spec.lead < 0 || spec.lead >= static_cast<int>(spec.terms.size()))
        throw ValidationError("lead index out of range");
    if (static_cast<int>(spec.chi.coords.size()) != spec.rank)
        throw ValidationError("chi dimension does not match the rank");
    const int d = target_dim(spec);
    if (d < 1) throw ValidationError("target vectors must be nonempty");
    for (const auto& term : spec.terms) {
        if (static_cast<int>(term.lam.coords.size()) != spec.rank)
            throw ValidationError("term weight dimension does not match the rank");
        if (static_cast<int>(term.w.size()) != d)
            throw ValidationError("target vectors must share one dimension");
    }
    const Weight& lead = spec.terms[spec.lead].lam;
    for (int a = 0; a < spec.rank; ++a)
        if (!(lead.coords[a] > 0))
            throw ValidationError("the lead term needs strictly positive coordinates");
    for (const auto& term : spec.terms)
        for (int a = 0; a < spec.rank; ++a)
            if (term.lam.coords[a] > lead.coords[a])
                throw ValidationError("every term must satisfy lam_i <= lam_lead coordinatewise");
    if (static_cast<int>(spec.terms.size()) > d)
        throw ValidationError("more terms than target dimensions: w_i cannot be independent");
    const double smin = smallest_singular_value(spec, all_indices(spec));
    const double smax = largest_singular_value(spec, all_indices(spec));
    if (!(smin > 1e-9 * smax))
        throw ValidationError("target vectors w_i are not linearly independent (tolerance 1e-9)");
}

ExponentTriple chi_exponents(const ExpMapSpec& spec) {
    validate_spec(spec);
    const Weight& lead = spec.terms[spec.lead].lam;
    Rational best = spec.chi.coords[0] / lead.coords[0];
    for (int a = 1; a < spec.rank; ++a) {
        const Rational r = spec.chi.coords[a] / lead.coords[a];
        if (r > best) best = r;
    }
    ExponentTriple out;
    out.a = best;
    std::vector<int> drop;
    for (int a = 0; a < spec.rank; ++a)
        if (spec.chi.coords[a] / lead.coords[a] < best) drop.push_back(a);
    out.I = StratumIndex::of(drop);
    out.b = spec.rank - static_cast<int>(drop.size());
    return out;
}

double kappa_chi(const ExpMapSpec& spec) {
    const ExponentTriple tri = chi_exponents(spec);
    const Weight& lead = spec.terms[spec.lead].lam;
    std::vector<int> complement;
    for (int a = 0; a < spec.rank; ++a)
        if (!tri.I.contains(a)) complement.push_back(a);
    const int b = static_cast<int>(complement.size());
    if (b != tri.b) throw InternalError("exponent bookkeeping mismatch in kappa_chi");

    // The slice lives on the face x_I = 0; work in the complement coordinates.
    std::vector<LpConstraint> cons;
    for (int j = 0; j < b; ++j) {
        LpConstraint ge;
        ge.a.assign(b, Rational(0));
        ge.a[j] = 1;
        ge.rel = LpRel::Ge;
        ge.rhs = 0;
        cons.push_back(std::move(ge));
    }
    LpConstraint eq;
    eq.a.resize(b);
    for (int j = 0; j < b; ++j) eq.a[j] = lead.coords[complement[j]];
    eq.rel = LpRel::Eq;
    eq.rhs = 1;
    cons.push_back(std::move(eq));

    const auto vertices = polytope_vertices(cons, b);
    if (vertices.empty()) throw InternalError("kappa slice polytope has no vertices");
    return cone_slab_volume(vertices);
}

TestFunction radial_bump(double r0, double r1) {
    if (!(0.0 < r0 && r0 < r1)) throw ValidationError("radial bump needs 0 < r0 < r1");
    TestFunction f;
    f.support_radius = r1;
    f.eval = [r0, r1](const std::vector<double>& v) {
        double n2 = 0.0;
        for (double x : v) n2 += x * x;
        const double r = std::sqrt(n2);
        if (r <= r0) return 1.0;
        if (r >= r1) return 0.0;
        const double c = std::cos(0.5 * M_PI * (r - r0) / (r1 - r0));
        return c * c;
    };
    return f;
}

TestFunction log_radial_bump(double flat, double cut, double power) {
    if (!(0.0 <= flat && flat < cut)) throw ValidationError("log-radial bump needs 0 <= flat < cut");
    TestFunction f;
    f.support_radius = std::exp(cut);
    f.eval = [flat, cut, power](const std::vector<double>& v) {
        double n2 = 0.0;
        for (double x : v) n2 += x * x;
        if (n2 <= 0.0) return 0.0;
        const double u = std::abs(0.5 * std::log(n2));
        if (u >= cut) return 0.0;
        double h = 1.0;
        if (u > flat) {
            const double c = std::cos(0.5 * M_PI * (u - flat) / (cut - flat));
            h = c * c;
        }
        return h * std::pow(n2, -0.5 * power);
    };
    return f;
}

double l_chi(const ExpMapSpec& spec, const TestFunction& f, const VolOptions& opts) {
    const ExponentTriple tri = chi_exponents(spec);
    if (f.support_radius <= 0.0) return 0.0;
    if (!(tri.a > 0))
        throw ValidationError("l_chi requires a positive leading exponent a_chi");

    const double a = to_double(tri.a);
    const std::vector<double> m = coords_double(spec.terms[spec.lead].lam);
    const std::vector<double> v = coords_double(spec.chi);
    const std::vector<int> inner = tri.I.members();
    std::vector<int> complement;
    for (int al = 0; al < spec.rank; ++al)
        if (!tri.I.contains(al)) complement.push_back(al);

    // Terms that survive in the boundary map psi: their gap from the lead is
    // supported inside I_chi (exact coordinate test).
    const Weight& lead = spec.terms[spec.lead].lam;
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(spec.terms.size()); ++i) {
        bool ok = true;
        for (int j : complement)
            if (spec.terms[i].lam.coords[j] != lead.coords[j]) { ok = false; break; }
        if (ok) keep.push_back(i);
    }

    // Gap exponents of the kept terms over the I coordinates.
    const int ni = static_cast<int>(inner.size());
    std::vector<std::vector<double>> gap(keep.size(), std::vector<double>(ni));
    for (int c = 0; c < static_cast<int>(keep.size()); ++c)
        for (int j = 0; j < ni; ++j)
            gap[c][j] =
                to_double(lead.coords[inner[j]] - spec.terms[keep[c]].lam.coords[inner[j]]);

    // Exponential damping rates on the I coordinates (strictly positive).
    std::vector<double> damp(ni);
    for (int j = 0; j < ni; ++j) {
        damp[j] = a * m[inner[j]] - v[inner[j]];
        if (!(damp[j] > 0)) throw InternalError("nonpositive damping rate off the limit face");
    }

    const double sigma = smallest_singular_value(spec, keep);
    const double u_cap = std::log(f.support_radius / sigma);

    Box box;
    box.lo.push_back(u_cap - 45.0 / a - 5.0);
    box.hi.push_back(u_cap);
    for (int j = 0; j < ni; ++j) {
        box.lo.push_back(0.0);
        box.hi.push_back(45.0 / damp[j] + 2.0);
    }

    const int d = target_dim(spec);
    const auto integrand = [&](const std::vector<double>& z) {
        std::vector<double> psi(d, 0.0);
        for (int c = 0; c < static_cast<int>(keep.size()); ++c) {
            double e = z[0];
            for (int j = 0; j < ni; ++j) e -= gap[c][j] * z[1 + j];
            const double coef = std::exp(e);
            const auto& w = spec.terms[keep[c]].w;
            for (int r = 0; r < d; ++r) psi[r] += coef * w[r];
        }
        const double val = f.eval(psi);
        if (val == 0.0) return 0.0;
        double e = a * z[0];
        for (int j = 0; j < ni; ++j) e -= damp[j] * z[1 + j];
        return val * std::exp(e);
    };

    const double prefactor = tri.b == 1 ? 1.0 / m[complement[0]] : 1.0;
    QuadratureOptions qopts;
    qopts.rel_tol = opts.rel_tol * 0.2;
    qopts.budget = opts.budget;
    qopts.threads = opts.threads;
    try {
        return prefactor * integrate(integrand, box, qopts).value;
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(e.what(), prefactor * e.partial_value, e.budget_used);
    }
}

namespace {

// Shared core of the finite-T integrals: the scaled value
// integral of f(phi(x)/T) e^{chi(x) - a log T} over the truncated chamber.
double finite_t_scaled(const ExpMapSpec& spec, const TestFunction& f, double T,
                       const VolOptions& opts, double a) {
    const std::vector<double> m = coords_double(spec.terms[spec.lead].lam);
    const std::vector<double> v = coords_double(spec.chi);
    const double log_t = std::log(T);
    const double sigma = smallest_singular_value(spec, all_indices(spec));
    const double lam_cap = log_t + std::log(2.0 * f.support_radius / sigma);
    if (lam_cap <= 0.0) return 0.0;

    Box box;
    for (int al = 0; al < spec.rank; ++al) {
        box.lo.push_back(0.0);
        box.hi.push_back(lam_cap / m[al]);
    }

    const int d = target_dim(spec);
    const int nterms = static_cast<int>(spec.terms.size());
    std::vector<std::vector<double>> lam(nterms);
    for (int i = 0; i < nterms; ++i) lam[i] = coords_double(spec.terms[i].lam);

    const auto integrand = [&](const std::vector<double>& x) {
        std::vector<double> phi(d, 0.0);
        for (int i = 0; i < nterms; ++i) {
            double e = -log_t;
            for (int al = 0; al < spec.rank; ++al) e += lam[i][al] * x[al];
            const double coef = std::exp(e);
            for (int r = 0; r < d; ++r) phi[r] += coef * spec.terms[i].w[r];
        }
        const double val = f.eval(phi);
        if (val == 0.0) return 0.0;
        double e = -a * log_t;
        for (int al = 0; al < spec.rank; ++al) e += v[al] * x[al];
        return val * std::exp(e);
    };

    QuadratureOptions qopts;
    qopts.rel_tol = opts.rel_tol * 0.2;
    qopts.budget = opts.budget;
    qopts.threads = opts.threads;
    return integrate(integrand, box, qopts).value;
}

} // namespace

double finite_t_integral(const ExpMapSpec& spec, const TestFunction& f, double T,
                         const VolOptions& opts) {
    const ExponentTriple tri = chi_exponents(spec);
    if (!(T >= 1.0)) throw ValidationError("finite_t_integral requires T >= 1");
    if (f.support_radius <= 0.0) return 0.0;
    const double a = to_double(tri.a);
    try {
        return std::pow(T, a) * finite_t_scaled(spec, f, T, opts, a);
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(e.what(), std::pow(T, a) * e.partial_value, e.budget_used);
    }
}

double finite_t_normalized(const ExpMapSpec& spec, const TestFunction& f, double T,
                           const VolOptions& opts) {
    const ExponentTriple tri = chi_exponents(spec);
    if (!(T > 1.0)) throw ValidationError("the normalized ratio requires T > 1");
    if (f.support_radius <= 0.0) return 0.0;
    const double a = to_double(tri.a);
    const double denom = std::pow(std::log(T), tri.b - 1);
    try {
        return finite_t_scaled(spec, f, T, opts, a) / denom;
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(e.what(), e.partial_value / denom, e.budget_used);
    }
}

double chamber_weight_integral(const ExpMapSpec& spec, double log_cap, const VolOptions& opts) {
    validate_spec(spec);
    if (!(log_cap > 0.0)) throw ValidationError("chamber cap must be positive");
    const std::vector<double> m = coords_double(spec.terms[spec.lead].lam);
    const std::vector<double> v = coords_double(spec.chi);
    const int r = spec.rank;

    // Smooth simplex substitution: s_j = (remaining budget) * y_j maps the
    // unit box onto {s >= 0, sum s <= log_cap}, x_j = s_j / m_j.
    double minv = 1.0;
    for (int j = 0; j < r; ++j) minv /= m[j];

    Box box;
    box.lo.assign(r, 0.0);
    box.hi.assign(r, 1.0);

    const auto integrand = [&](const std::vector<double>& y) {
        double rem = log_cap, jac = minv, expo = 0.0;
        for (int j = 0; j < r; ++j) {
            jac *= rem;
            const double s = rem * y[j];
            expo += v[j] * (s / m[j]);
            rem -= s;
        }
        return jac * std::exp(expo);
    };

    QuadratureOptions qopts;
    qopts.rel_tol = opts.rel_tol * 0.2;
    qopts.budget = opts.budget;
    qopts.threads = opts.threads;
    return integrate(integrand, box, qopts).value;
}

double density_log_eval(const ChamberDensity& d, const std::vector<double>& t) {
    const RootSystemDesc& rs = d.rs;
    if (static_cast<int>(t.size()) != rs.rank)
        throw ValidationError("chamber point dimension does not match the rank");
    if (d.kind != DensityKind::Xi)
        for (int i : d.I.members())
            if (i >= rs.rank) throw ValidationError("stratum index out of range");

    // Simple-root values through the Gram pairing; the closed chamber is
    // where all of them are nonnegative.
    const RatMat g = gram_matrix(rs);
    std::vector<double> simple_val(rs.rank, 0.0);
    for (int i = 0; i < rs.rank; ++i) {
        double s = 0.0;
        for (int j = 0; j < rs.rank; ++j) s += to_double(g[j][i]) * t[j];
        if (s < -1e-9) throw ValidationError("point lies outside the closed chamber");
        simple_val[i] = std::max(s, 0.0);
    }

    double log_sum = 0.0;
    for (const auto& root : rs.positive_roots) {
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
            if (root.coeffs[i] != 0 && !d.I.contains(i)) { inside = false; break; }
        double val = 0.0;
        for (int i = 0; i < rs.rank; ++i) val += root.coeffs[i] * simple_val[i];

        switch (d.kind) {
        case DensityKind::Xi:
            if (root.mult_plus > 0) log_sum += root.mult_plus * log_sinh(val);
            if (root.mult_minus > 0) log_sum += root.mult_minus * log_cosh(val);
            break;
        case DensityKind::DeltaI:
            if (!inside) break;
            if (root.mult_plus > 0) log_sum += root.mult_plus * log_sinh(val);
            if (root.mult_minus > 0) log_sum += root.mult_minus * log_cosh(val);
            break;
        case DensityKind::XiI:
            if (inside) {
                if (root.mult_plus > 0) log_sum += root.mult_plus * log_sinh(val);
                if (root.mult_minus > 0) log_sum += root.mult_minus * log_cosh(val);
            } else {
                log_sum += root.mult() * val;
            }
            break;
        }
        if (log_sum == -HUGE_VAL) return -HUGE_VAL;
    }
    return log_sum;
}

double density_eval(const ChamberDensity& d, const std::vector<double>& t) {
    return std::exp(density_log_eval(d, t));
}

double ball_volume(const PointFamily& fam, double T) {
    if (fam.norm != NormKind::Euclidean)
        throw ValidationError("no K-reduction available for the sup norm");
    if (T <= 0.0) return 0.0;

    if (fam.kind == FamilyKind::Quadric) {
        const double kk = std::abs(static_cast<double>(fam.k));
        const double ratio = T * T / kk;
        if (ratio <= 1.0) return 0.0;
        const double smax = 0.5 * std::acosh(ratio);
        if (!(smax > 0.0)) return 0.0;
        // For k > 0 the radial density is sinh^{q-1} cosh^{p-1}; k < 0 swaps
        // the roles of the two sphere factors.
        const int pp = fam.k > 0 ? fam.p : fam.q;
        const int qq = fam.k > 0 ? fam.q : fam.p;
        const double constant = sphere_area(fam.p) * sphere_area(fam.q) *
                                std::pow(kk, 0.5 * (fam.p + fam.q - 2));
        const auto radial = [&](const std::vector<double>& s) {
            return std::pow(std::sinh(s[0]), qq - 1) * std::pow(std::cosh(s[0]), pp - 1);
        };
        QuadratureOptions qopts;
        qopts.rel_tol = 1e-9;
        Box box{{0.0}, {smax}};
        return constant * integrate(radial, box, qopts).value;
    }

    if (fam.kind == FamilyKind::Detsurface && fam.n == 2) {
        const double kk = std::abs(static_cast<double>(fam.k));
        const double ratio = T * T / (2.0 * kk);
        if (ratio <= 1.0) return 0.0;
        // Radial density sinh(2s) against |v|_F^2 = 2k cosh(2s): the integral
        // up to the ball radius is (cosh(2 smax) - 1)/2 = (ratio - 1)/2.
        const double constant = 4.0 * M_PI * M_PI * kk;
        return constant * 0.5 * (ratio - 1.0);
    }

    throw ValidationError("no K-reduction available for this preset");
}

} // namespace satake

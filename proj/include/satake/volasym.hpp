#pragma once

#include <functional>
#include <vector>

#include "satake/families.hpp"
#include "satake/quadrature.hpp"
#include "satake/strata.hpp"

namespace satake {

// Numerical side of the growth-exponent story: exponential coordinate maps
// phi(x) = sum_i e^{lam_i(x)} w_i on the closed chamber, the renormalized
// volume integrals whose T -> infinity limit factors as kappa_chi * L_chi(f),
// chamber densities, and the K-reduced ball volumes of the matrix presets.
//
// Convention: the chamber is the positive orthant in coordinates
// x = (x_1..x_rank), and a Weight with simple-root coordinates m evaluates as
// the plain dot product m . x.  Every quantity in this module (kappa, L, the
// finite-T integrals) is computed in this one coordinate system, so the
// limit identity is convention-free.

struct ExpTerm {
    Weight lam;            // exponent functional, simple-root coordinates
    std::vector<double> w; // target vector in R^d
};

struct ExpMapSpec {
    int rank = 0;
    std::vector<ExpTerm> terms;
    int lead = 0; // index of the distinguished term lambda_1
    Weight chi;   // the exponential weight character
};

// Checks: rank >= 1; terms nonempty with consistent dimensions; the lead
// term's coordinates are all > 0; every lam_i <= lam_lead coordinatewise;
// the w_i are linearly independent (smallest singular value above 1e-9
// relative to the largest).  Throws ValidationError.
void validate_spec(const ExpMapSpec& spec);

// Exponent calculus driven by chi's coordinates v against the lead term's m:
// a = max v_alpha / m_alpha, I = {alpha : ratio < a}, b = rank - |I|.
ExponentTriple chi_exponents(const ExpMapSpec& spec);

// Slab volume of the slice {x >= 0, x_alpha = 0 on I_chi, lam_lead(x) = 1},
// by exact vertex enumeration and simplex decomposition.  A 0-dimensional
// slice has volume 1 by convention.
double kappa_chi(const ExpMapSpec& spec);

// A continuous test function on R^d with compact support: eval(v) == 0
// whenever |v|_2 >= support_radius.
struct TestFunction {
    std::function<double(const std::vector<double>&)> eval;
    double support_radius = 0.0;
};

// 1 on |v| <= r0, cos^2 taper to 0 at r1.
TestFunction radial_bump(double r0, double r1);

// h(log|v|) / |v|^power with h an even flat-top bump: 1 for |log|v|| <= flat,
// cos^2 taper to 0 at |log|v|| = cut.  Support radius e^{cut}.  With
// power = a_chi this makes the weighted profile symmetric in the chamber
// variable, which kills the leading 1/log T correction of the renormalized
// integrals.
TestFunction log_radial_bump(double flat, double cut, double power);

struct VolOptions {
    long long budget = 10'000'000; // integrand evaluations per integral
    double rel_tol = 1e-4;
    int threads = 1;
};

// Boundary functional L_chi(f): the integral of f(psi) e^{chi} over the
// quotient cone, where psi keeps exactly the terms whose gap lam_lead - lam_i
// is supported inside I_chi.  Requires a_chi > 0.  Budget exhaustion raises
// BudgetExceeded carrying the partial estimate.
double l_chi(const ExpMapSpec& spec, const TestFunction& f, const VolOptions& opts = {});

// The finite-T chamber integral of f(phi(x)/T) e^{chi(x)} over the truncated
// chamber {lam_lead(x) <= log(cT)}, where c is derived from f's support and
// the w_i geometry.  May overflow to +inf for very large a_chi * log T; the
// normalized form below never does.
double finite_t_integral(const ExpMapSpec& spec, const TestFunction& f, double T,
                         const VolOptions& opts = {});

// finite_t_integral(T) / (T^{a_chi} (log T)^{b_chi - 1}), computed in scaled
// space so it stays finite; converges to kappa_chi * l_chi as T grows.
double finite_t_normalized(const ExpMapSpec& spec, const TestFunction& f, double T,
                           const VolOptions& opts = {});

// Integral of e^{chi(x)} over {x >= 0 : lam_lead(x) <= log_cap}, via a smooth
// simplex substitution.  The boundedness companion of the normalized ratio.
double chamber_weight_integral(const ExpMapSpec& spec, double log_cap,
                               const VolOptions& opts = {});

// Chamber densities: the full Cartan-integration density xi, the stratum
// density delta_I over the roots supported in I, and the boundary density
// xi_I = delta_I * exp(sum of (mult * root) over the complement).
enum class DensityKind { Xi, DeltaI, XiI };

struct ChamberDensity {
    RootSystemDesc rs;
    DensityKind kind = DensityKind::Xi;
    StratumIndex I; // consulted by DeltaI and XiI
};

// log of the density at the chamber point with coordinates t (rootlat
// convention: roots evaluate through the Gram pairing).  -infinity where a
// sinh factor vanishes.  Throws ValidationError off the closed chamber.
double density_log_eval(const ChamberDensity& d, const std::vector<double>& t);

// exp of the above; 0 at chamber walls with a + multiplicity, may overflow
// to +inf deep in the chamber (use the log form there).
double density_eval(const ChamberDensity& d, const std::vector<double>& t);

// Volume of {v in V : |v| < T} for the presets with an explicit K-reduction
// (quadric, and the 2x2 determinant surface), up to a fixed normalization
// constant.  Euclidean norm only.  Other presets throw ValidationError
// ("no K-reduction available").
double ball_volume(const PointFamily& fam, double T);

} // namespace satake

#pragma once

#include <functional>
#include <vector>

#include "satake/families.hpp"
#include "satake/rootsystem.hpp"
#include "satake/strata.hpp"

namespace satake {

// Spherical cap on the unit sphere of the ambient coordinate space, in
// chordal distance: { x != 0 : | x/|x| - center | < radius }.
struct CapSpec {
    std::vector<double> center; // unit vector (coordinate Euclidean norm)
    double radius = 0.0;        // 0 < radius < 1
    bool operator==(const CapSpec&) const = default;
};

struct CountRecord {
    double T = 0.0;
    long long total = 0;
    std::vector<long long> per_cap; // one slot per cap, same order as input
    long long elapsed_ms = 0;
};

// Records for the completed rungs; `truncated` marks a ladder cut short by
// the candidate budget (the unfinished rung is dropped, not reported).
struct LadderResult {
    std::vector<CountRecord> records;
    bool truncated = false;
};

struct CountOptions {
    long long candidate_budget = -1; // < 0 means unlimited
};

// Visit every integral point of the family with norm strictly below T,
// exactly once, in a fixed deterministic order.
void for_each_point(const PointFamily& fam, double T,
                    const std::function<void(const std::vector<long long>&)>& visit);

// Materialized variant of for_each_point, same order.
std::vector<std::vector<long long>> enumerate_points(const PointFamily& fam, double T);

// Stratum of a boundary direction: the input is normalized, required to lie
// near the cone at infinity (defining form below 1e-9), and classified by
// numerical rank (determinant surfaces), numerical signature (symmetric
// matrices), or to the unique stratum (quadrics).
StratumIndex classify_stratum(const PointFamily& fam, const std::vector<double>& direction);

// Predicted local counting exponents at a boundary direction: the relative
// exponents of the stratum the direction lands in.
ExponentTriple local_exponents(const PointFamily& fam, const RootSystemDesc& rs,
                               const Weight& lam, const std::vector<double>& direction);

// Counts along an increasing T ladder, with per-cap tallies from a single
// enumeration pass per rung.
LadderResult count_ladder(const PointFamily& fam, const std::vector<CapSpec>& caps,
                          const std::vector<double>& ladder, const CountOptions& opts = {});

struct ExponentFit {
    double a_fit = 0.0;
    double a_stderr = 0.0;
};

// Least-squares slope of log N_T - (b_theory - 1) log log T against log T.
// b is never fitted: theory supplies it, the data validates a.  Requires at
// least four records with positive totals.
ExponentFit fit_exponent(const std::vector<CountRecord>& records, int b_theory);

struct HistogramRow {
    double bin_lo = 0.0;
    double bin_hi = 0.0;
    double empirical = 0.0; // fraction of points in the bin
    double predicted = 0.0; // limit-measure mass of the bin
};

struct AngularResult {
    double ks_distance = 0.0;
    std::vector<HistogramRow> histogram;
    long long points = 0;
};

// Empirical angular distribution of x/|x| against the predicted limit
// measure, projected to the polar angle of the first sphere factor.
// Implemented for quadrics with p = 2; needs at least 1000 points.
// The Kolmogorov-Smirnov distance is computed from the raw sorted samples;
// n_bins only shapes the returned histogram.
AngularResult angular_compare(const PointFamily& fam, double T, int n_bins);

} // namespace satake

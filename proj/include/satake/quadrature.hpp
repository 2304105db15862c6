#pragma once

#include <functional>
#include <vector>

#include "satake/errors.hpp"

namespace satake {

// Adaptive tensor-product Gauss-Legendre integration over axis-aligned boxes.
// Panels are refined breadth-first; within a wave, panels may be evaluated in
// parallel, but acceptance decisions and the final summation always follow the
// fixed panel creation order, so results are bit-identical across thread
// counts.

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1), ascending
    std::vector<double> weights; // positive, sum to 2
};

// Nodes and weights of the n-point rule, computed by Newton iteration on the
// Legendre polynomial and cached per order.  1 <= n <= 64.
const GaussRule& gauss_legendre(int n);

struct Box {
    std::vector<double> lo;
    std::vector<double> hi;
    int dim() const { return static_cast<int>(lo.size()); }
    double volume() const;
};

using Integrand = std::function<double(const std::vector<double>&)>;

struct QuadratureOptions {
    double rel_tol = 1e-6;      // per-panel relative acceptance threshold
    double abs_floor = 0.0;     // absolute floor; 0 means derive from a coarse pass
    long long budget = 10'000'000; // max integrand evaluations
    int order = 8;              // Gauss-Legendre points per axis
    int initial_split = 2;      // first-level subdivisions per axis
    int max_depth = 38;         // refinement depth cap below the initial split
    int threads = 1;            // parallel panel evaluation; result is thread-count invariant
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;   // sum of accepted panel discrepancies
    long long evaluations = 0;
};

// Integrates f over the box.  A panel is accepted when the one-shot tensor
// estimate and the sum over its 2^dim children agree to the mixed tolerance;
// otherwise the children are queued.  Throws BudgetExceeded (carrying the
// partial value accumulated so far plus the best estimates of the unfinished
// panels) when the evaluation budget runs out, and ValidationError on a
// degenerate box.
QuadratureResult integrate(const Integrand& f, const Box& box, const QuadratureOptions& opts = {});

// Plain adaptive Simpson in one dimension.  Kept deliberately independent of
// the Gauss-Legendre machinery so the two can serve as cross-checks.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 50);

} // namespace satake

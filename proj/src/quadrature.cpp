#include "satake/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace satake {

double Box::volume() const {
    double v = 1.0;
    for (int i = 0; i < dim(); ++i) v *= hi[i] - lo[i];
    return v;
}

namespace {

GaussRule compute_gauss_rule(int n) {
    // Roots of P_n by Newton iteration from the Chebyshev-angle initial guess;
    // weights w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2).
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n and P_n' by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -std::abs(x);
        rule.nodes[n - 1 - i] = std::abs(x);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

std::mutex rule_mutex;
std::map<int, GaussRule> rule_cache;

struct Panel {
    std::vector<double> lo, hi;
    int depth = 0;
    double estimate = 0.0; // filled by the wave evaluation
};

// Tensor-product Gauss-Legendre estimate over one panel.
double panel_estimate(const Integrand& f, const GaussRule& rule,
                      const std::vector<double>& lo, const std::vector<double>& hi) {
    const int d = static_cast<int>(lo.size());
    const int n = static_cast<int>(rule.nodes.size());
    std::vector<int> idx(d, 0);
    std::vector<double> pt(d);
    double sum = 0.0;
    for (;;) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            const double half = 0.5 * (hi[i] - lo[i]);
            pt[i] = lo[i] + half * (1.0 + rule.nodes[idx[i]]);
            w *= half * rule.weights[idx[i]];
        }
        sum += w * f(pt);
        int i = 0;
        while (i < d && ++idx[i] == n) idx[i++] = 0;
        if (i == d) break;
    }
    return sum;
}

long long evals_per_panel(int order, int dim) {
    long long e = 1;
    for (int i = 0; i < dim; ++i) e *= order;
    return e;
}

// Splits a panel into 2^dim children, ordered by the bit pattern of which
// axes take the upper half (the fixed ordering the reduction relies on).
std::vector<Panel> split_panel(const Panel& p) {
    const int d = static_cast<int>(p.lo.size());
    std::vector<Panel> children;
    children.reserve(1u << d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Panel c;
        c.lo = p.lo;
        c.hi = p.hi;
        c.depth = p.depth + 1;
        for (int i = 0; i < d; ++i) {
            const double mid = 0.5 * (p.lo[i] + p.hi[i]);
            if (mask & (1u << i)) c.lo[i] = mid;
            else c.hi[i] = mid;
        }
        children.push_back(std::move(c));
    }
    return children;
}

void evaluate_wave(const Integrand& f, const GaussRule& rule, std::vector<Panel>& wave,
                   int threads) {
    const int n = static_cast<int>(wave.size());
    if (threads <= 1 || n <= 1) {
        for (auto& p : wave) p.estimate = panel_estimate(f, rule, p.lo, p.hi);
        return;
    }
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    const int team = std::min(threads, n);
    for (int t = 0; t < team; ++t)
        workers.emplace_back([&]() {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                wave[i].estimate = panel_estimate(f, rule, wave[i].lo, wave[i].hi);
            }
        });
    for (auto& w : workers) w.join();
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > 64) throw ValidationError("Gauss-Legendre order must be in [1, 64]");
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto it = rule_cache.find(n);
    if (it == rule_cache.end()) it = rule_cache.emplace(n, compute_gauss_rule(n)).first;
    return it->second;
}

QuadratureResult integrate(const Integrand& f, const Box& box, const QuadratureOptions& opts) {
    const int d = box.dim();
    if (d < 1 || static_cast<int>(box.hi.size()) != d)
        throw ValidationError("integration box must have matching nonempty bounds");
    for (int i = 0; i < d; ++i)
        if (!(box.lo[i] < box.hi[i]))
            throw ValidationError("integration box is degenerate: lo must be < hi per axis");
    if (opts.order < 2) throw ValidationError("quadrature order must be at least 2");
    if (opts.initial_split < 1) throw ValidationError("initial split must be at least 1");

    const GaussRule& rule = gauss_legendre(opts.order);
    const long long per_panel = evals_per_panel(opts.order, d);
    long long used = 0;

    // Fixed first-level partition: initial_split pieces per axis, ordered by
    // mixed-radix index.  This is the determinism anchor for the reduction.
    std::vector<Panel> wave;
    {
        std::vector<int> idx(d, 0);
        for (;;) {
            Panel p;
            p.lo.resize(d);
            p.hi.resize(d);
            for (int i = 0; i < d; ++i) {
                const double step = (box.hi[i] - box.lo[i]) / opts.initial_split;
                p.lo[i] = box.lo[i] + idx[i] * step;
                p.hi[i] = (idx[i] + 1 == opts.initial_split) ? box.hi[i] : p.lo[i] + step;
            }
            wave.push_back(std::move(p));
            int i = 0;
            while (i < d && ++idx[i] == opts.initial_split) idx[i++] = 0;
            if (i == d) break;
        }
    }

    used += per_panel * static_cast<long long>(wave.size());
    if (used > opts.budget)
        throw BudgetExceeded("quadrature budget exhausted on the initial partition", 0.0, used);
    evaluate_wave(f, rule, wave, opts.threads);

    // Scale for the absolute floor: the coarse pass's total magnitude.
    double scale = 0.0;
    for (const auto& p : wave) scale += std::abs(p.estimate);
    const double floor_abs =
        opts.abs_floor > 0.0 ? opts.abs_floor : std::max(scale, 1e-300) * opts.rel_tol * 1e-4;

    QuadratureResult result;
    result.evaluations = used;

    while (!wave.empty()) {
        // Children of every current panel, evaluated as one parallel wave.
        std::vector<std::vector<Panel>> kids(wave.size());
        std::vector<Panel> flat;
        for (int i = 0; i < static_cast<int>(wave.size()); ++i) {
            kids[i] = split_panel(wave[i]);
            for (auto& c : kids[i]) flat.push_back(c);
        }
        const long long wave_cost = per_panel * static_cast<long long>(flat.size());
        if (result.evaluations + wave_cost > opts.budget) {
            // Report the best value we have: accepted mass plus the pending
            // one-shot estimates.
            double partial = result.value;
            for (const auto& p : wave) partial += p.estimate;
            throw BudgetExceeded("quadrature budget exhausted before convergence", partial,
                                 result.evaluations);
        }
        evaluate_wave(f, rule, flat, opts.threads);
        result.evaluations += wave_cost;

        std::vector<Panel> next_wave;
        int flat_at = 0;
        for (int i = 0; i < static_cast<int>(wave.size()); ++i) {
            double refined = 0.0;
            for (int c = 0; c < static_cast<int>(kids[i].size()); ++c)
                refined += flat[flat_at + c].estimate;
            const double disc = std::abs(refined - wave[i].estimate);
            const bool accept = disc <= std::max(floor_abs, opts.rel_tol * std::abs(refined)) ||
                                wave[i].depth >= opts.max_depth;
            if (accept) {
                result.value += refined;
                result.error_estimate += disc;
            } else {
                for (int c = 0; c < static_cast<int>(kids[i].size()); ++c) {
                    next_wave.push_back(flat[flat_at + c]);
                    next_wave.back().estimate = flat[flat_at + c].estimate;
                }
            }
            flat_at += static_cast<int>(kids[i].size());
        }
        wave = std::move(next_wave);
    }
    return result;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    struct Rec {
        const std::function<double(double)>& f;
        double run(double lo, double hi, double flo, double fmid, double fhi, double whole,
                   double tol, int depth) {
            const double mid = 0.5 * (lo + hi);
            const double lm = f(0.5 * (lo + mid));
            const double rm = f(0.5 * (mid + hi));
            const double left = (mid - lo) / 6.0 * (flo + 4.0 * lm + fmid);
            const double right = (hi - mid) / 6.0 * (fmid + 4.0 * rm + fhi);
            if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return run(lo, mid, flo, lm, fmid, left, tol * 0.5, depth - 1) +
                   run(mid, hi, fmid, rm, fhi, right, tol * 0.5, depth - 1);
        }
    };
    const double flo = f(a), fhi = f(b), fmid = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (flo + 4.0 * fmid + fhi);
    Rec rec{f};
    return rec.run(a, b, flo, fmid, fhi, whole, tol, max_depth);
}

} // namespace satake

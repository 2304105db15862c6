#include "satake/counter.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "satake/errors.hpp"
#include "satake/quadrature.hpp"

namespace satake {

namespace {

using Visit = std::function<void(const std::vector<long long>&)>;

// Enumeration abort used to cut a ladder short; never escapes this TU.
struct BudgetStop {};

struct Budget {
    long long remaining = -1; // < 0: unlimited
    long long used = 0;
    void spend() {
        ++used;
        if (remaining < 0) return;
        if (--remaining < 0) throw BudgetStop{};
    }
};

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Largest admissible norm2_int value for strict norm < T.
long long norm2_threshold(const PointFamily& fam, double T) {
    if (!(T >= 1.0)) throw ValidationError("enumeration requires T >= 1");
    if (T > 1e6) throw ValidationError("T too large for exact integer enumeration");
    if (fam.norm == NormKind::Sup) {
        const long long e = static_cast<long long>(std::ceil(T)) - 1;
        return e * e;
    }
    return static_cast<long long>(std::ceil(T * T)) - 1;
}

// Bound on a coordinate with quadratic weight w, given the remaining norm
// budget (Euclidean) or the global entry bound (sup).
long long coord_bound(const PointFamily& fam, long long thr, long long rem, long long w) {
    if (fam.norm == NormKind::Sup) return isqrt_ll(thr);
    return isqrt_ll(rem / w);
}

bool norm_ok(const PointFamily& fam, long long thr, const std::vector<long long>& x) {
    return norm2_int(fam, x) <= thr;
}

void enum_quadric(const PointFamily& fam, long long thr, const Visit& visit, Budget& budget) {
    const int d = fam.p + fam.q;
    std::vector<long long> x(d, 0);
    // Recurse over the first d-1 coordinates; the last (minus-block)
    // coordinate is solved by a perfect-square test.
    auto rec = [&](auto&& self, int idx, long long rem) -> void {
        if (idx == d - 1) {
            budget.spend();
            long long s = 0;
            for (int i = 0; i < d - 1; ++i) s += (i < fam.p ? 1 : -1) * x[i] * x[i];
            const long long y2 = s - fam.k;
            if (y2 < 0) return;
            const long long ymax = coord_bound(fam, thr, rem, 1);
            if (y2 > ymax * ymax) return;
            const long long y = isqrt_ll(y2);
            if (y * y != y2) return;
            x[d - 1] = -y;
            visit(x);
            if (y > 0) {
                x[d - 1] = y;
                visit(x);
            }
            return;
        }
        const long long bound = coord_bound(fam, thr, rem, 1);
        for (long long c = -bound; c <= bound; ++c) {
            x[idx] = c;
            self(self, idx + 1, rem - c * c);
        }
    };
    rec(rec, 0, thr);
}

void enum_det2(const PointFamily& fam, long long thr, const Visit& visit, Budget& budget) {
    // Row-major (a, b, c, d) with ad - bc = k: enumerate the diagonal, then
    // factor ad - k into divisor pairs.
    std::vector<long long> x(4, 0);
    const long long abound = coord_bound(fam, thr, thr, 1);
    for (long long a = -abound; a <= abound; ++a) {
        const long long rem_a = thr - a * a;
        const long long dbound = coord_bound(fam, thr, rem_a, 1);
        for (long long d = -dbound; d <= dbound; ++d) {
            budget.spend();
            const long long rem = rem_a - d * d;
            const long long n = a * d - fam.k;
            x[0] = a;
            x[3] = d;
            const long long off_bound = coord_bound(fam, thr, rem, 1);
            if (n == 0) {
                // bc = 0: one of b, c vanishes; (0,0) is emitted once.
                for (long long c = -off_bound; c <= off_bound; ++c) {
                    x[1] = 0;
                    x[2] = c;
                    if (norm_ok(fam, thr, x)) visit(x);
                }
                for (long long b = -off_bound; b <= off_bound; ++b) {
                    if (b == 0) continue;
                    x[1] = b;
                    x[2] = 0;
                    if (norm_ok(fam, thr, x)) visit(x);
                }
                continue;
            }
            const long long abs_n = std::llabs(n);
            const long long emax = isqrt_ll(abs_n);
            for (long long e = 1; e <= emax; ++e) {
                budget.spend();
                if (abs_n % e != 0) continue;
                const long long f = abs_n / e;
                const long long pairs[4][2] = {
                    {e, n / e}, {-e, -(n / e)}, {f, n / f}, {-f, -(n / f)}};
                const int npairs = (e == f) ? 2 : 4;
                for (int t = 0; t < npairs; ++t) {
                    x[1] = pairs[t][0];
                    x[2] = pairs[t][1];
                    if (norm_ok(fam, thr, x)) visit(x);
                }
            }
        }
    }
}

void enum_det3(const PointFamily& fam, long long thr, const Visit& visit, Budget& budget) {
    // Rows r1 = (x0,x1,x2), r2 = (x3..x5); r3 solves (r1 x r2) . r3 = k.
    std::vector<long long> x(9, 0);
    auto rec_rows = [&](auto&& self, int idx, long long rem) -> void {
        if (idx == 6) {
            budget.spend();
            const long long w0 = x[1] * x[5] - x[2] * x[4];
            const long long w1 = x[2] * x[3] - x[0] * x[5];
            const long long w2 = x[0] * x[4] - x[1] * x[3];
            if (w0 == 0 && w1 == 0 && w2 == 0) return;
            const long long w[3] = {w0, w1, w2};
            // Cofactor prune: |w . r3| <= |w| |r3|.
            const double wn = std::sqrt(static_cast<double>(w0 * w0 + w1 * w1 + w2 * w2));
            const double rn = std::sqrt(static_cast<double>(
                fam.norm == NormKind::Sup ? 3 * thr : std::max<long long>(rem, 0)));
            if (wn * rn < std::llabs(fam.k)) return;
            int jm = 0;
            for (int j = 1; j < 3; ++j)
                if (std::llabs(w[j]) > std::llabs(w[jm])) jm = j;
            const int ja = (jm == 0) ? 1 : 0;
            const int jb = (jm == 2) ? 1 : 2;
            const long long ubound = coord_bound(fam, thr, std::max<long long>(rem, 0), 1);
            for (long long u = -ubound; u <= ubound; ++u) {
                const long long rem_u = rem - u * u;
                const long long vbound = coord_bound(fam, thr, std::max<long long>(rem_u, 0), 1);
                for (long long v = -vbound; v <= vbound; ++v) {
                    budget.spend();
                    const long long numer = fam.k - w[ja] * u - w[jb] * v;
                    if (numer % w[jm] != 0) continue;
                    const long long z = numer / w[jm];
                    x[6 + ja] = u;
                    x[6 + jb] = v;
                    x[6 + jm] = z;
                    if (norm_ok(fam, thr, x)) visit(x);
                }
            }
            return;
        }
        const long long bound = coord_bound(fam, thr, rem, 1);
        for (long long c = -bound; c <= bound; ++c) {
            x[idx] = c;
            self(self, idx + 1, rem - c * c);
        }
    };
    rec_rows(rec_rows, 0, thr);
}

void enum_symmat(const PointFamily& fam, long long thr, const Visit& visit, Budget& budget) {
    const int n = fam.n;
    const int dim = fam.ambient_dim();
    // Quadratic weight of each packed coordinate in the Frobenius norm.
    std::vector<long long> weight(dim, 2);
    for (int i = 0, idx = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++idx)
            if (i == j) weight[idx] = 1;

    std::vector<long long> x(dim, 0);
    auto rec = [&](auto&& self, int idx, long long rem) -> void {
        if (idx == dim) {
            budget.spend();
            if (on_family(fam, x)) visit(x);
            return;
        }
        const long long bound = coord_bound(fam, thr, rem, weight[idx]);
        for (long long c = -bound; c <= bound; ++c) {
            x[idx] = c;
            self(self, idx + 1, rem - weight[idx] * c * c);
        }
    };
    rec(rec, 0, thr);
}

void enumerate_with_budget(const PointFamily& fam, double T, const Visit& visit,
                           Budget& budget) {
    const long long thr = norm2_threshold(fam, T);
    switch (fam.kind) {
    case FamilyKind::Quadric:
        enum_quadric(fam, thr, visit, budget);
        return;
    case FamilyKind::Detsurface:
        if (fam.n == 2) {
            enum_det2(fam, thr, visit, budget);
            return;
        }
        if (fam.n == 3) {
            if (T > 20.0)
                throw ValidationError(
                    "T beyond the per-family safety budget for 3x3 determinant surfaces");
            enum_det3(fam, thr, visit, budget);
            return;
        }
        throw ValidationError("determinant surfaces with n >= 4 are not enumerable");
    case FamilyKind::Symmat:
        if (fam.n > 4)
            throw ValidationError("symmetric-matrix enumeration is limited to n <= 4");
        enum_symmat(fam, thr, visit, budget);
        return;
    }
    throw InternalError("unhandled family kind");
}

double predicted_angular_density(const PointFamily& fam, double theta) {
    // Density of the limit measure's polar-angle marginal, up to a constant:
    // integral over the second sphere factor of |v|^{-a} with
    // v = (cos t, sin t, omega)/sqrt(2).
    if (fam.norm == NormKind::Euclidean) return 1.0;
    const double a = fam.p + fam.q - 2;
    const double m1 = std::max(std::abs(std::cos(theta)), std::abs(std::sin(theta)));
    if (fam.q == 1) return std::pow(std::max(m1, 1.0), -a);
    if (fam.q == 2) {
        const int steps = 512;
        double sum = 0.0;
        for (int i = 0; i < steps; ++i) {
            const double phi = 2.0 * M_PI * (i + 0.5) / steps;
            const double m2 = std::max(std::abs(std::cos(phi)), std::abs(std::sin(phi)));
            sum += std::pow(std::max(m1, m2), -a);
        }
        return sum / steps;
    }
    throw ValidationError("sup-norm angular prediction is implemented for q <= 2");
}

} // namespace

void for_each_point(const PointFamily& fam, double T, const Visit& visit) {
    Budget unlimited;
    enumerate_with_budget(fam, T, visit, unlimited);
}

std::vector<std::vector<long long>> enumerate_points(const PointFamily& fam, double T) {
    std::vector<std::vector<long long>> out;
    for_each_point(fam, T, [&](const std::vector<long long>& x) { out.push_back(x); });
    return out;
}

StratumIndex classify_stratum(const PointFamily& fam, const std::vector<double>& direction) {
    if (static_cast<int>(direction.size()) != fam.ambient_dim())
        throw ValidationError("direction dimension does not match the family");
    double nrm2 = 0.0;
    for (double c : direction) nrm2 += c * c;
    if (!(nrm2 > 0.0)) throw ValidationError("zero direction");
    const double nrm = std::sqrt(nrm2);
    std::vector<double> u(direction.size());
    for (size_t i = 0; i < u.size(); ++i) u[i] = direction[i] / nrm;

    const double tol = 1e-9;
    switch (fam.kind) {
    case FamilyKind::Quadric: {
        double q = 0.0;
        for (int i = 0; i < fam.p + fam.q; ++i) q += (i < fam.p ? 1.0 : -1.0) * u[i] * u[i];
        if (std::abs(q) >= tol) throw ValidationError("interior direction");
        return StratumIndex::of(std::vector<int>{});
    }
    case FamilyKind::Detsurface: {
        const int n = fam.n;
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = u[i * n + j];
        if (std::abs(m.determinant()) >= tol) throw ValidationError("interior direction");
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const auto& sig = svd.singularValues();
        int rank = 0;
        for (int i = 0; i < sig.size(); ++i)
            if (sig(i) > tol * sig(0)) ++rank;
        std::vector<int> members;
        for (int i = 0; i + 1 < rank; ++i) members.push_back(i);
        return StratumIndex::of(members);
    }
    case FamilyKind::Symmat: {
        const int n = fam.n;
        Eigen::MatrixXd m(n, n);
        for (int i = 0, idx = 0; i < n; ++i)
            for (int j = i; j < n; ++j, ++idx) {
                m(i, j) = u[idx];
                m(j, i) = u[idx];
            }
        if (std::abs(m.determinant()) >= tol) throw ValidationError("interior direction");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        const auto& ev = es.eigenvalues();
        const double amax = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
        int r = 0, s = 0;
        for (int i = 0; i < n; ++i) {
            if (ev(i) > tol * amax) ++r;
            if (ev(i) < -tol * amax) ++s;
        }
        std::vector<int> members;
        for (int i = 0; i + 1 < r + s; ++i) members.push_back(i);
        return StratumIndex::of(members);
    }
    }
    throw InternalError("unhandled family kind");
}

ExponentTriple local_exponents(const PointFamily& fam, const RootSystemDesc& rs,
                               const Weight& lam, const std::vector<double>& direction) {
    return exponents_rel(rs, lam, classify_stratum(fam, direction));
}

LadderResult count_ladder(const PointFamily& fam, const std::vector<CapSpec>& caps,
                          const std::vector<double>& ladder, const CountOptions& opts) {
    if (ladder.empty()) throw ValidationError("empty T ladder");
    for (size_t i = 0; i + 1 < ladder.size(); ++i)
        if (!(ladder[i] < ladder[i + 1]))
            throw ValidationError("T ladder must be strictly increasing");
    for (const CapSpec& cap : caps) {
        if (static_cast<int>(cap.center.size()) != fam.ambient_dim())
            throw ValidationError("cap center dimension does not match the family");
        double n2 = 0.0;
        for (double c : cap.center) n2 += c * c;
        if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
            throw ValidationError("cap center must be a unit vector");
        if (!(cap.radius > 0.0 && cap.radius < 1.0))
            throw ValidationError("cap radius must lie in (0, 1)");
    }

    LadderResult result;
    Budget budget{opts.candidate_budget, 0};
    std::vector<double> pi(fam.ambient_dim());
    for (double T : ladder) {
        CountRecord rec;
        rec.T = T;
        rec.per_cap.assign(caps.size(), 0);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            enumerate_with_budget(fam, T,
                                  [&](const std::vector<long long>& x) {
                                      ++rec.total;
                                      if (caps.empty()) return;
                                      double n2 = 0.0;
                                      for (long long c : x)
                                          n2 += static_cast<double>(c) * static_cast<double>(c);
                                      const double nrm = std::sqrt(n2);
                                      for (size_t i = 0; i < x.size(); ++i)
                                          pi[i] = static_cast<double>(x[i]) / nrm;
                                      for (size_t ci = 0; ci < caps.size(); ++ci) {
                                          double d2 = 0.0;
                                          for (size_t i = 0; i < pi.size(); ++i) {
                                              const double d = pi[i] - caps[ci].center[i];
                                              d2 += d * d;
                                          }
                                          if (std::sqrt(d2) < caps[ci].radius) ++rec.per_cap[ci];
                                      }
                                  },
                                  budget);
        } catch (const BudgetStop&) {
            result.truncated = true;
            break;
        }
        rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        result.records.push_back(std::move(rec));
    }
    return result;
}

ExponentFit fit_exponent(const std::vector<CountRecord>& records, int b_theory) {
    if (b_theory < 1) throw ValidationError("b_theory must be a positive integer");
    std::vector<double> xs, ys;
    for (const CountRecord& r : records) {
        if (r.total <= 0 || !(r.T > 1.0)) continue;
        const double lt = std::log(r.T);
        xs.push_back(lt);
        ys.push_back(std::log(static_cast<double>(r.total)) -
                     (b_theory - 1) * std::log(lt));
    }
    const int n = static_cast<int>(xs.size());
    if (n < 4) throw ValidationError("need at least four rungs with positive counts");

    double xbar = 0.0, ybar = 0.0;
    for (int i = 0; i < n; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (!(sxx > 0.0)) throw ValidationError("degenerate ladder: all T equal");
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;
    double ss_res = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        ss_res += r * r;
    }
    ExponentFit fit;
    fit.a_fit = slope;
    fit.a_stderr = std::sqrt(ss_res / (n - 2) / sxx);
    return fit;
}

AngularResult angular_compare(const PointFamily& fam, double T, int n_bins) {
    if (fam.kind != FamilyKind::Quadric || fam.p != 2)
        throw ValidationError("angular comparison is implemented for quadrics with p = 2");
    if (n_bins < 1) throw ValidationError("n_bins must be positive");

    std::vector<double> thetas;
    for_each_point(fam, T, [&](const std::vector<long long>& x) {
        thetas.push_back(std::atan2(static_cast<double>(x[1]), static_cast<double>(x[0])));
    });
    if (static_cast<long long>(thetas.size()) < 1000)
        throw ValidationError("too few points for an angular comparison");
    std::sort(thetas.begin(), thetas.end());

    // Predicted CDF of the polar angle on [-pi, pi].
    std::function<double(double)> cdf;
    if (fam.norm == NormKind::Euclidean || fam.q == 1) {
        cdf = [](double t) { return (t + M_PI) / (2.0 * M_PI); };
    } else {
        const int grid = 4096;
        auto table = std::make_shared<std::vector<double>>(grid + 1, 0.0);
        double acc = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double mid = -M_PI + 2.0 * M_PI * (i + 0.5) / grid;
            acc += predicted_angular_density(fam, mid);
            (*table)[i + 1] = acc;
        }
        for (double& v : *table) v /= acc;
        cdf = [table, grid](double t) {
            const double pos = (t + M_PI) / (2.0 * M_PI) * grid;
            const int i = std::clamp(static_cast<int>(pos), 0, grid - 1);
            const double frac = pos - i;
            return (*table)[i] * (1.0 - frac) + (*table)[i + 1] * frac;
        };
    }

    AngularResult out;
    out.points = static_cast<long long>(thetas.size());
    const double n = static_cast<double>(thetas.size());
    for (size_t i = 0; i < thetas.size(); ++i) {
        const double f = cdf(thetas[i]);
        out.ks_distance = std::max(out.ks_distance, std::abs(f - i / n));
        out.ks_distance = std::max(out.ks_distance, std::abs(f - (i + 1) / n));
    }

    out.histogram.resize(n_bins);
    for (int b = 0; b < n_bins; ++b) {
        HistogramRow& row = out.histogram[b];
        row.bin_lo = -M_PI + 2.0 * M_PI * b / n_bins;
        row.bin_hi = -M_PI + 2.0 * M_PI * (b + 1) / n_bins;
        row.predicted = cdf(row.bin_hi) - cdf(row.bin_lo);
    }
    for (double t : thetas) {
        int b = static_cast<int>((t + M_PI) / (2.0 * M_PI) * n_bins);
        b = std::clamp(b, 0, n_bins - 1);
        out.histogram[b].empirical += 1.0 / n;
    }
    return out;
}

} // namespace satake

#include "satake/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace satake {

namespace {

int min_rank(Family f) {
    switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    default: return 1;
    }
}

constexpr int kMaxRank = 32;

// Simple roots in the family's standard orthonormal model (A_r lives in R^{r+1},
// the others in R^r).
std::vector<std::vector<int>> standard_simple_roots(Family f, int r) {
    std::vector<std::vector<int>> out;
    const int ambient = (f == Family::A) ? r + 1 : r;
    for (int i = 0; i < r; ++i) {
        std::vector<int> v(ambient, 0);
        switch (f) {
        case Family::A:
            v[i] = 1;
            v[i + 1] = -1;
            break;
        case Family::B:
            if (i < r - 1) {
                v[i] = 1;
                v[i + 1] = -1;
            } else {
                v[r - 1] = 1;
            }
            break;
        case Family::C:
            if (i < r - 1) {
                v[i] = 1;
                v[i + 1] = -1;
            } else {
                v[r - 1] = 2;
            }
            break;
        case Family::D:
            if (i < r - 1) {
                v[i] = 1;
                v[i + 1] = -1;
            } else {
                v[r - 2] = 1;
                v[r - 1] = 1;
            }
            break;
        default:
            throw InternalError("standard_simple_roots: explicit family");
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool is_root_in_model(Family f, const std::vector<int>& v) {
    int nonzero = 0, ones = 0, minus_ones = 0, twos = 0;
    for (int x : v) {
        if (x == 0) continue;
        ++nonzero;
        if (x == 1) ++ones;
        else if (x == -1) ++minus_ones;
        else if (x == 2 || x == -2) ++twos;
        else return false;
    }
    switch (f) {
    case Family::A:
        return nonzero == 2 && ones == 1 && minus_ones == 1;
    case Family::B:
        return (nonzero == 1 && twos == 0) || (nonzero == 2 && twos == 0);
    case Family::C:
        return (nonzero == 1 && twos == 1) || (nonzero == 2 && twos == 0);
    case Family::D:
        return nonzero == 2 && twos == 0;
    default:
        throw InternalError("is_root_in_model: explicit family");
    }
}

std::vector<int> to_model(const std::vector<std::vector<int>>& simple_model, const std::vector<int>& coeffs) {
    std::vector<int> v(simple_model[0].size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += coeffs[i] * simple_model[i][k];
    return v;
}

int model_norm2(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x * x;
    return s;
}

void check_mult(int lp, int lm) {
    if (lp < 0 || lm < 0 || lp + lm < 1)
        throw ValidationError("multiplicities must satisfy l+ >= 0, l- >= 0, l+ + l- >= 1");
}

RatVec linear_solve(RatMat a, RatVec b) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    if (rref(a) != n) throw InternalError("linear_solve: singular system");
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    default: return "explicit";
    }
}

bool PositiveRoot::is_simple() const {
    int sum = 0;
    for (int c : coeffs) {
        if (c < 0) return false;
        sum += c;
    }
    return sum == 1;
}

const PositiveRoot& RootSystemDesc::simple(int i) const {
    if (i < 0 || i >= rank) throw ValidationError("simple root index out of range");
    for (const auto& b : positive_roots)
        if (b.is_simple() && b.coeffs[i] == 1) return b;
    throw InternalError("simple root missing from positive_roots");
}

std::string RootSystemDesc::root_name(int i) const {
    if (i < 0 || i >= rank) throw ValidationError("simple root index out of range");
    return "alpha_" + std::to_string(i + 1);
}

MultiplicityProfile MultiplicityProfile::uniform(int lp, int lm) {
    check_mult(lp, lm);
    MultiplicityProfile p;
    p.uniform_value = {lp, lm};
    return p;
}

MultiplicityProfile MultiplicityProfile::by_length(std::map<int, std::pair<int, int>> table) {
    for (const auto& [norm2, lv] : table) {
        if (norm2 <= 0) throw ValidationError("length class key must be positive");
        check_mult(lv.first, lv.second);
    }
    MultiplicityProfile p;
    p.length_table = std::move(table);
    return p;
}

std::pair<int, int> MultiplicityProfile::lookup(int norm2) const {
    if (uniform_value) return *uniform_value;
    const auto it = length_table.find(norm2);
    if (it == length_table.end())
        throw ValidationError("multiplicity profile has no entry for length class " + std::to_string(norm2));
    return it->second;
}

RootSystemDesc build_root_system(Family family, int rank, const MultiplicityProfile& profile) {
    if (family == Family::Explicit)
        throw ValidationError("use build_explicit_root_system for explicit systems");
    if (rank < min_rank(family) || rank > kMaxRank)
        throw ValidationError("rank " + std::to_string(rank) + " out of range for family " + family_name(family));

    const auto model = standard_simple_roots(family, rank);

    // Closure: grow positive roots by adding one simple root at a time.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> c(rank, 0);
        c[i] = 1;
        seen.insert(c);
        queue.push_back(std::move(c));
    }
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank; ++i) {
            auto cand = cur;
            ++cand[i];
            if (seen.count(cand)) continue;
            if (is_root_in_model(family, to_model(model, cand))) {
                seen.insert(cand);
                queue.push_back(std::move(cand));
            }
        }
    }

    RootSystemDesc rs;
    rs.rank = rank;
    rs.family = family;
    for (const auto& c : seen) {
        PositiveRoot b;
        b.coeffs = c;
        b.norm2 = model_norm2(to_model(model, c));
        std::tie(b.mult_plus, b.mult_minus) = profile.lookup(b.norm2);
        rs.positive_roots.push_back(std::move(b));
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const PositiveRoot& x, const PositiveRoot& y) { return x.coeffs < y.coeffs; });

    rs.cartan.assign(rank, std::vector<int>(rank, 0));
    rs.simple_norm2.resize(rank);
    for (int j = 0; j < rank; ++j) rs.simple_norm2[j] = model_norm2(model[j]);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            int ip = 0;
            for (std::size_t k = 0; k < model[i].size(); ++k) ip += model[i][k] * model[j][k];
            rs.cartan[i][j] = 2 * ip / rs.simple_norm2[j];
        }
    }
    return rs;
}

RootSystemDesc build_explicit_root_system(int rank,
                                          const std::vector<std::vector<int>>& cartan,
                                          const std::vector<ExplicitRoot>& roots) {
    if (rank < 1 || rank > kMaxRank) throw ValidationError("explicit rank out of range");
    if (static_cast<int>(cartan.size()) != rank)
        throw ValidationError("Cartan matrix must be rank x rank");
    for (const auto& row : cartan)
        if (static_cast<int>(row.size()) != rank) throw ValidationError("Cartan matrix must be rank x rank");
    for (int i = 0; i < rank; ++i) {
        if (cartan[i][i] != 2) throw ValidationError("Cartan diagonal must be 2");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0) throw ValidationError("Cartan off-diagonal entries must be <= 0");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw ValidationError("Cartan zero pattern must be symmetric");
        }
    }

    // Recover root lengths: <a_i,a_j> = C_ij d_j = C_ji d_i.  Propagate over the
    // Dynkin graph and then verify global consistency (rejects unsymmetrizable
    // input).
    std::vector<Rational> d(rank, Rational(0));
    for (int seed = 0; seed < rank; ++seed) {
        if (d[seed] != 0) continue;
        d[seed] = 1;
        std::deque<int> queue{seed};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < rank; ++j) {
                if (i == j || cartan[i][j] == 0 || d[j] != 0) continue;
                d[j] = d[i] * cartan[j][i] / cartan[i][j];
                queue.push_back(j);
            }
        }
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (cartan[i][j] * d[j] != cartan[j][i] * d[i])
                throw ValidationError("Cartan matrix is not symmetrizable");

    // Scale so every <a_i,a_i> = 2 d_i is a positive integer with overall gcd 1.
    Integer den_lcm = 1;
    for (const auto& q : d) {
        const Rational twice = 2 * q;
        den_lcm = lcm(den_lcm, denominator(twice));
    }
    std::vector<Integer> norm2_big(rank);
    Integer num_gcd = 0;
    for (int i = 0; i < rank; ++i) {
        const Rational scaled = 2 * d[i] * den_lcm;
        norm2_big[i] = numerator(scaled);
        num_gcd = gcd(num_gcd, norm2_big[i]);
    }

    RootSystemDesc rs;
    rs.rank = rank;
    rs.family = Family::Explicit;
    rs.cartan = cartan;
    rs.simple_norm2.resize(rank);
    for (int i = 0; i < rank; ++i)
        rs.simple_norm2[i] = static_cast<int>(norm2_big[i] / num_gcd);

    // Finite type <=> the Gram form is positive definite (all leading
    // principal minors positive); affine and indefinite matrices stop here.
    const RatMat g = gram_matrix(rs);
    for (int k = 1; k <= rank; ++k) {
        RatMat minor(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
        if (determinant(minor) <= 0)
            throw ValidationError("Cartan matrix is not of finite type");
    }

    if (roots.empty()) throw ValidationError("explicit system needs positive roots");
    std::set<std::vector<int>> seen;
    std::vector<bool> simple_present(rank, false);
    for (const auto& er : roots) {
        if (static_cast<int>(er.coeffs.size()) != rank)
            throw ValidationError("root coefficient vector has wrong length");
        int sum = 0;
        for (int c : er.coeffs) {
            if (c < 0) throw ValidationError("positive roots need nonnegative coefficients");
            sum += c;
        }
        if (sum == 0) throw ValidationError("zero vector is not a root");
        if (!seen.insert(er.coeffs).second) throw ValidationError("duplicate positive root");
        check_mult(er.mult_plus, er.mult_minus);
        if (sum == 1) {
            for (int i = 0; i < rank; ++i)
                if (er.coeffs[i] == 1) simple_present[i] = true;
        }
        PositiveRoot b;
        b.coeffs = er.coeffs;
        b.mult_plus = er.mult_plus;
        b.mult_minus = er.mult_minus;
        rs.positive_roots.push_back(std::move(b));
    }
    for (int i = 0; i < rank; ++i)
        if (!simple_present[i])
            throw ValidationError("simple root alpha_" + std::to_string(i + 1) + " missing");

    for (auto& b : rs.positive_roots) {
        Rational q = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) q += Rational(b.coeffs[i]) * g[i][j] * Rational(b.coeffs[j]);
        if (q <= 0) throw InternalError("explicit root with nonpositive length");
        // norm2 is informational for explicit systems; round to the nearest
        // integer representation when exact, else scale by the denominator.
        b.norm2 = denominator(q) == 1 ? static_cast<int>(numerator(q)) : 0;
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const PositiveRoot& x, const PositiveRoot& y) { return x.coeffs < y.coeffs; });
    return rs;
}

Weight two_rho(const RootSystemDesc& rs) {
    Weight w;
    w.coords.assign(rs.rank, Rational(0));
    for (const auto& b : rs.positive_roots)
        for (int i = 0; i < rs.rank; ++i) w.coords[i] += Rational(b.mult()) * b.coeffs[i];
    return w;
}

Weight weight_from_fundamental(const RootSystemDesc& rs, const RatVec& n) {
    if (static_cast<int>(n.size()) != rs.rank)
        throw ValidationError("fundamental coordinate vector has wrong length");
    RatMat ct(rs.rank, RatVec(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) ct[i][j] = rs.cartan[j][i];
    return Weight{linear_solve(std::move(ct), n)};
}

RatVec fundamental_from_weight(const RootSystemDesc& rs, const Weight& w) {
    if (static_cast<int>(w.coords.size()) != rs.rank)
        throw ValidationError("weight has wrong rank");
    RatVec n(rs.rank, Rational(0));
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.rank; ++i) n[j] += Rational(rs.cartan[i][j]) * w.coords[i];
    return n;
}

Pairing pairing_sign(const RootSystemDesc& rs, const Weight& lam, int i) {
    if (i < 0 || i >= rs.rank) throw ValidationError("pairing_sign: index out of range");
    return eval_covector(rs, lam)[i] == 0 ? Pairing::Zero : Pairing::NonZero;
}

RatMat gram_matrix(const RootSystemDesc& rs) {
    RatMat g(rs.rank, RatVec(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            g[i][j] = Rational(rs.cartan[i][j]) * Rational(rs.simple_norm2[j], 2);
    return g;
}

RatVec eval_covector(const RootSystemDesc& rs, const Weight& w) {
    if (static_cast<int>(w.coords.size()) != rs.rank)
        throw ValidationError("weight has wrong rank");
    return mat_vec(gram_matrix(rs), w.coords);
}

RationalSubspace kernel_subspace(const RootSystemDesc& rs, const std::vector<Weight>& functionals) {
    RatMat rows;
    rows.reserve(functionals.size());
    for (const auto& w : functionals) rows.push_back(eval_covector(rs, w));
    return RationalSubspace{rs.rank, kernel_of_rows(rows, rs.rank)};
}

} // namespace satake

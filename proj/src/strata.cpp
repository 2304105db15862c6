#include "satake/strata.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "satake/errors.hpp"
#include "satake/lp.hpp"
#include "satake/rational.hpp"

namespace satake {

StratumIndex StratumIndex::of(std::initializer_list<int> members) {
    return of(std::vector<int>(members));
}

StratumIndex StratumIndex::of(const std::vector<int>& members) {
    StratumIndex s;
    for (int i : members) {
        if (i < 0 || i >= 32) throw ValidationError("stratum member out of range");
        s.bits |= (1u << static_cast<unsigned>(i));
    }
    return s;
}

StratumIndex StratumIndex::full(int rank) {
    if (rank < 0 || rank > 32) throw ValidationError("stratum rank out of range");
    StratumIndex s;
    s.bits = rank == 32 ? ~0u : ((1u << static_cast<unsigned>(rank)) - 1u);
    return s;
}

int StratumIndex::size() const { return std::popcount(bits); }

std::vector<int> StratumIndex::members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

bool lex_less(const ExponentPair& x, const ExponentPair& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

namespace {

void check_weight(const RootSystemDesc& rs, const Weight& lam) {
    if (static_cast<int>(lam.coords.size()) != rs.rank)
        throw ValidationError("weight dimension does not match the rank");
    bool nonzero = false;
    for (const auto& v : lam.coords) nonzero = nonzero || v != 0;
    if (!nonzero) throw ValidationError("weight must be nonzero");
}

void check_members(const RootSystemDesc& rs, const StratumIndex& I) {
    if (!I.subset_of(StratumIndex::full(rs.rank)))
        throw ValidationError("stratum index has members outside the simple roots");
}

// Diagram adjacency as bitmasks: adj[i] = simple roots joined to alpha_i,
// lam_adj = simple roots with nonzero Gram pairing against lam.
struct DiagramMasks {
    std::vector<std::uint32_t> adj;
    std::uint32_t lam_adj = 0;
};

DiagramMasks diagram_masks(const RootSystemDesc& rs, const Weight& lam) {
    DiagramMasks d;
    d.adj.assign(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            if (i != j && rs.cartan[i][j] != 0) d.adj[i] |= (1u << static_cast<unsigned>(j));
    const RatVec e = eval_covector(rs, lam);
    for (int i = 0; i < rs.rank; ++i)
        if (e[i] != 0) d.lam_adj |= (1u << static_cast<unsigned>(i));
    return d;
}

// Connected component of lam in the diagram restricted to the mask I, with
// lam itself dropped from the answer.
std::uint32_t lam_component(const DiagramMasks& d, std::uint32_t I) {
    std::uint32_t reached = d.lam_adj & I;
    for (;;) {
        std::uint32_t next = reached;
        for (std::uint32_t scan = reached; scan != 0; scan &= scan - 1)
            next |= d.adj[std::countr_zero(scan)] & I;
        if (next == reached) return reached;
        reached = next;
    }
}

// Ratios u_alpha / m_alpha over the complement of I; the shared core of the
// exponent calculus.
ExponentTriple exponents_over_complement(const RootSystemDesc& rs, const Weight& lam,
                                         const StratumIndex& I) {
    const RatVec u = two_rho(rs).coords;
    const RatVec& m = lam.coords;
    bool have = false;
    Rational a;
    for (int i = 0; i < rs.rank; ++i) {
        if (I.contains(i)) continue;
        if (m[i] <= 0)
            throw ValidationError("weight must have positive coordinates off the stratum");
        const Rational ratio = u[i] / m[i];
        if (!have || ratio > a) {
            a = ratio;
            have = true;
        }
    }
    ExponentTriple out;
    out.a = a;
    out.I = I;
    for (int i = 0; i < rs.rank; ++i) {
        if (I.contains(i)) continue;
        if (u[i] / m[i] < a) out.I.bits |= (1u << static_cast<unsigned>(i));
    }
    out.b = rs.rank - out.I.size();
    return out;
}

void sort_by_size_then_bits(std::vector<StratumIndex>& v) {
    std::sort(v.begin(), v.end(), [](const StratumIndex& x, const StratumIndex& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.bits < y.bits;
    });
}

} // namespace

bool is_lambda_connected(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I) {
    check_weight(rs, lam);
    check_members(rs, I);
    const DiagramMasks d = diagram_masks(rs, lam);
    return lam_component(d, I.bits) == I.bits;
}

std::vector<StratumIndex> enumerate_lambda_connected(const RootSystemDesc& rs, const Weight& lam) {
    if (rs.rank > 24) throw ValidationError("stratum enumeration is guarded to rank <= 24");
    check_weight(rs, lam);
    const DiagramMasks d = diagram_masks(rs, lam);
    const std::uint32_t full = StratumIndex::full(rs.rank).bits;
    std::vector<StratumIndex> out;
    for (std::uint32_t mask = 0; mask < full; ++mask)
        if (lam_component(d, mask) == mask) out.push_back(StratumIndex{mask});
    sort_by_size_then_bits(out);
    return out;
}

StratumIndex largest_lambda_connected(const RootSystemDesc& rs, const Weight& lam,
                                      const StratumIndex& J) {
    check_weight(rs, lam);
    check_members(rs, J);
    const DiagramMasks d = diagram_masks(rs, lam);
    return StratumIndex{lam_component(d, J.bits)};
}

ExponentTriple exponents_global(const RootSystemDesc& rs, const Weight& lam) {
    check_weight(rs, lam);
    for (const auto& v : lam.coords)
        if (v <= 0) throw ValidationError("weight must have positive simple-root coordinates");
    return exponents_over_complement(rs, lam, StratumIndex{});
}

ExponentTriple exponents_rel(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I) {
    check_weight(rs, lam);
    check_members(rs, I);
    if (I == StratumIndex::full(rs.rank))
        throw ValidationError("stratum must be a proper subset of the simple roots");
    if (!is_lambda_connected(rs, lam, I))
        throw ValidationError("stratum index is not lambda-connected");
    return exponents_over_complement(rs, lam, I);
}

ClosurePoset closure_poset(const RootSystemDesc& rs, const Weight& lam) {
    ClosurePoset p;
    p.nodes = enumerate_lambda_connected(rs, lam);
    std::unordered_set<std::uint32_t> present;
    for (const auto& n : p.nodes) present.insert(n.bits);
    const int count = static_cast<int>(p.nodes.size());
    for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) {
            if (!p.nodes[i].proper_subset_of(p.nodes[j])) continue;
            const std::uint32_t diff = p.nodes[j].bits & ~p.nodes[i].bits;
            bool covered = std::popcount(diff) == 1;
            if (!covered) {
                covered = true;
                for (std::uint32_t sub = (diff - 1) & diff; sub != 0; sub = (sub - 1) & diff) {
                    if (present.count(p.nodes[i].bits | sub)) {
                        covered = false;
                        break;
                    }
                }
            }
            if (covered) p.edges.emplace_back(i, j);
        }
    }
    return p;
}

StratumIndex j_of(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I) {
    check_weight(rs, lam);
    check_members(rs, I);
    const RatVec e = eval_covector(rs, lam);
    StratumIndex out = I;
    for (int i = 0; i < rs.rank; ++i) {
        if (I.contains(i) || e[i] != 0) continue;
        bool orth = true;
        for (int j : I.members()) orth = orth && rs.cartan[i][j] == 0;
        if (orth) out.bits |= (1u << static_cast<unsigned>(i));
    }
    return out;
}

bool measure_exists(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I) {
    const StratumIndex J = j_of(rs, lam, I);
    std::vector<Weight> walls;
    for (int j : J.members()) {
        Weight w{RatVec(rs.rank, Rational(0))};
        w.coords[j] = 1;
        walls.push_back(std::move(w));
    }
    auto with = [&](const Weight& extra) {
        std::vector<Weight> fns = walls;
        fns.push_back(extra);
        return kernel_subspace(rs, fns);
    };
    return with(two_rho(rs)) == with(lam);
}

ThetaResult theta_of(const RootSystemDesc& rs, const Weight& lam,
                     const std::vector<StratumIndex>& strata) {
    if (strata.empty()) throw ValidationError("theta_of: need at least one stratum");
    ThetaResult out;
    bool have = false;
    for (const auto& I : strata) {
        const ExponentTriple t = exponents_rel(rs, lam, I);
        if (!have || lex_less(out.exponents, t.pair())) {
            out.exponents = t.pair();
            out.limit_strata.clear();
            have = true;
        }
        if (t.pair() == out.exponents) out.limit_strata.push_back(t.I);
    }
    sort_by_size_then_bits(out.limit_strata);
    out.limit_strata.erase(std::unique(out.limit_strata.begin(), out.limit_strata.end()),
                           out.limit_strata.end());
    return out;
}

PolytopeExponents polytope_exponents(const RootSystemDesc& rs, const std::vector<Weight>& weights) {
    if (weights.empty()) throw ValidationError("polytope_exponents: need at least one weight");
    const RatMat gram = gram_matrix(rs);
    std::vector<LpConstraint> cons;
    for (int i = 0; i < rs.rank; ++i) cons.push_back({gram[i], LpRel::Ge, Rational(0)});
    for (const auto& w : weights) {
        check_weight(rs, w);
        cons.push_back({eval_covector(rs, w), LpRel::Le, Rational(1)});
    }
    const RatVec objective = eval_covector(rs, two_rho(rs));

    const LpResult top = lp_maximize(objective, cons, rs.rank);
    if (top.status == LpStatus::Unbounded) {
        std::ostringstream msg;
        msg << "weight polytope is unbounded; recession ray (";
        for (std::size_t k = 0; k < top.ray.size(); ++k)
            msg << (k ? ", " : "") << rational_to_string(top.ray[k]);
        msg << ")";
        throw ValidationError(msg.str());
    }
    if (top.status != LpStatus::Optimal)
        throw InternalError("polytope_exponents: chamber cone lost feasibility");

    // Dimension of the optimal face: a constraint is implicitly tight when
    // its slack cannot move off zero anywhere on the face; the face's affine
    // hull is cut out by those normals together with the objective level.
    std::vector<LpConstraint> on_face = cons;
    on_face.push_back({objective, LpRel::Eq, top.value});
    RatMat normals{objective};
    for (const auto& con : cons) {
        RatVec obj = con.a;
        if (con.rel == LpRel::Le)
            for (auto& v : obj) v = -v;
        const LpResult slack = lp_maximize(obj, on_face, rs.rank);
        if (slack.status != LpStatus::Optimal)
            throw InternalError("polytope_exponents: face subproblem must stay bounded");
        Rational max_slack = slack.value - con.rhs;
        if (con.rel == LpRel::Le) max_slack = con.rhs + slack.value;
        if (max_slack == 0) normals.push_back(con.a);
    }
    PolytopeExponents out;
    out.a = top.value;
    out.b = 1 + rs.rank - rank_of(normals);
    return out;
}

} // namespace satake

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "satake/errors.hpp"
#include "satake/strata.hpp"

using namespace satake;

namespace {

RootSystemDesc sys(Family f, int rank, int lp = 1, int lm = 0) {
    return build_root_system(f, rank, MultiplicityProfile::uniform(lp, lm));
}

Weight two_omega1(const RootSystemDesc& rs) {
    RatVec n(rs.rank, Rational(0));
    n[0] = 2;
    return weight_from_fundamental(rs, n);
}

// Nonzero dominant weight with small random fundamental coordinates; on the
// irreducible families this forces all simple-root coordinates positive.
Weight random_dominant(const RootSystemDesc& rs, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 4);
    RatVec n(rs.rank, Rational(0));
    bool nonzero = false;
    while (!nonzero) {
        for (auto& v : n) {
            v = pick(rng);
            nonzero = nonzero || v != 0;
        }
    }
    return weight_from_fundamental(rs, n);
}

// Three pairwise-orthogonal rank-one factors; the only preset-independent
// way to get a weight orthogonal to a whole island of the diagram.
RootSystemDesc orthogonal_triple() {
    const std::vector<std::vector<int>> cartan{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    std::vector<ExplicitRoot> roots;
    for (int i = 0; i < 3; ++i) {
        ExplicitRoot r;
        r.coeffs.assign(3, 0);
        r.coeffs[i] = 1;
        roots.push_back(std::move(r));
    }
    return build_explicit_root_system(3, cartan, roots);
}

} // namespace

TEST_CASE("stratum index basics") {
    const auto I = StratumIndex::of({0, 2});
    CHECK(I.size() == 2);
    CHECK(I.members() == std::vector<int>{0, 2});
    CHECK(I.contains(2));
    CHECK(!I.contains(1));
    CHECK(I.subset_of(StratumIndex::full(3)));
    CHECK(I.proper_subset_of(StratumIndex::full(3)));
    CHECK(!StratumIndex::full(3).proper_subset_of(StratumIndex::full(3)));
    CHECK_THROWS_AS(StratumIndex::of({-1}), ValidationError);

    CHECK(lex_less({Rational(1), 5}, {Rational(2), 1}));
    CHECK(lex_less({Rational(2), 1}, {Rational(2), 2}));
    CHECK(!lex_less({Rational(2), 2}, {Rational(2), 2}));
}

TEST_CASE("lambda-connectivity on the A_2 standard weight") {
    const auto a2 = sys(Family::A, 2);
    const auto lam = two_omega1(a2);
    CHECK(is_lambda_connected(a2, lam, StratumIndex{}));
    CHECK(is_lambda_connected(a2, lam, StratumIndex::of({0})));
    CHECK(!is_lambda_connected(a2, lam, StratumIndex::of({1})));
    CHECK(is_lambda_connected(a2, lam, StratumIndex::of({0, 1})));
    CHECK_THROWS_AS(is_lambda_connected(a2, Weight{RatVec(2, Rational(0))}, StratumIndex{}),
                    ValidationError);
    CHECK_THROWS_AS(is_lambda_connected(a2, lam, StratumIndex::of({5})), ValidationError);
}

TEST_CASE("enumerating lambda-connected strata") {
    const auto a2 = sys(Family::A, 2);
    CHECK(enumerate_lambda_connected(a2, two_omega1(a2)) ==
          std::vector<StratumIndex>{StratumIndex{}, StratumIndex::of({0})});

    const auto a3 = sys(Family::A, 3);
    CHECK(enumerate_lambda_connected(a3, two_omega1(a3)) ==
          std::vector<StratumIndex>{StratumIndex{}, StratumIndex::of({0}), StratumIndex::of({0, 1})});

    CHECK(enumerate_lambda_connected(a2, two_rho(a2)) ==
          std::vector<StratumIndex>{StratumIndex{}, StratumIndex::of({0}), StratumIndex::of({1})});

    // Sorted by size then bitmask, always proper, always starting at the
    // empty set; cross-checked against the one-at-a-time predicate.
    std::mt19937 rng(7101);
    for (const auto& rs : {sys(Family::B, 3), sys(Family::D, 4), sys(Family::A, 4, 2, 1)}) {
        const auto lam = random_dominant(rs, rng);
        const auto all = enumerate_lambda_connected(rs, lam);
        CHECK(!all.empty());
        CHECK(all.front() == StratumIndex{});
        const auto full = StratumIndex::full(rs.rank);
        std::set<std::uint32_t> seen;
        for (const auto& I : all) {
            CHECK(I.proper_subset_of(full));
            CHECK(is_lambda_connected(rs, lam, I));
            CHECK(seen.insert(I.bits).second);
        }
        for (std::uint32_t mask = 0; mask < full.bits; ++mask) {
            const bool listed = seen.count(mask) > 0;
            CHECK(listed == is_lambda_connected(rs, lam, StratumIndex{mask}));
        }
        for (std::size_t k = 1; k < all.size(); ++k) {
            const bool ordered = all[k - 1].size() < all[k].size() ||
                                 (all[k - 1].size() == all[k].size() && all[k - 1].bits < all[k].bits);
            CHECK(ordered);
        }
    }

    const auto big = sys(Family::A, 25);
    CHECK_THROWS_AS(enumerate_lambda_connected(big, two_omega1(big)), ValidationError);
}

TEST_CASE("largest lambda-connected subset") {
    const auto a2 = sys(Family::A, 2);
    const auto lam2 = two_omega1(a2);
    CHECK(largest_lambda_connected(a2, lam2, StratumIndex::of({1})) == StratumIndex{});
    CHECK(largest_lambda_connected(a2, lam2, StratumIndex::of({0})) == StratumIndex::of({0}));

    const auto a3 = sys(Family::A, 3);
    CHECK(largest_lambda_connected(a3, two_omega1(a3), StratumIndex::of({0, 2})) ==
          StratumIndex::of({0}));

    // Oracle: the union of every lambda-connected subset of J.
    std::mt19937 rng(7102);
    for (const auto& rs : {sys(Family::A, 4), sys(Family::B, 3), sys(Family::C, 3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto lam = random_dominant(rs, rng);
            std::uniform_int_distribution<std::uint32_t> mask(0, StratumIndex::full(rs.rank).bits);
            const StratumIndex J{mask(rng)};
            StratumIndex want;
            for (std::uint32_t sub = J.bits;; sub = (sub - 1) & J.bits) {
                if (is_lambda_connected(rs, lam, StratumIndex{sub})) want.bits |= sub;
                if (sub == 0) break;
            }
            const auto got = largest_lambda_connected(rs, lam, J);
            CHECK(got == want);
            CHECK(got.subset_of(J));
            CHECK(is_lambda_connected(rs, lam, got));
        }
    }
}

TEST_CASE("global exponents on the worked families") {
    // Determinant surface, n = 3: A_2 with every multiplicity doubled.
    const auto det3 = sys(Family::A, 2, 1, 1);
    const auto e3 = exponents_global(det3, two_omega1(det3));
    CHECK(e3.a == Rational(6));
    CHECK(e3.b == 1);
    CHECK(e3.I == StratumIndex::of({0}));

    // Symmetric matrices, n = 3: same diagram, multiplicity one.
    const auto sym3 = sys(Family::A, 2);
    const auto s3 = exponents_global(sym3, two_omega1(sym3));
    CHECK(s3.a == Rational(3));
    CHECK(s3.b == 1);
    CHECK(s3.I == StratumIndex::of({0}));

    // lambda = 2 rho collapses to (1, rank, empty) everywhere.
    for (const auto& rs : {sys(Family::A, 2), sys(Family::B, 3), sys(Family::D, 4, 2, 1)}) {
        const auto t = exponents_global(rs, two_rho(rs));
        CHECK(t.a == Rational(1));
        CHECK(t.b == rs.rank);
        CHECK(t.I == StratumIndex{});
    }

    // Weights touching the chamber walls are rejected.
    CHECK_THROWS_AS(exponents_global(sym3, Weight{rat_vec({1, 0})}), ValidationError);
    CHECK_THROWS_AS(exponents_global(sym3, Weight{rat_vec({1, -1})}), ValidationError);
}

TEST_CASE("relative exponents") {
    const auto det3 = sys(Family::A, 2, 1, 1);
    const auto lam3 = two_omega1(det3);
    const auto r3 = exponents_rel(det3, lam3, StratumIndex::of({0}));
    CHECK(r3.a == Rational(6));
    CHECK(r3.b == 1);
    CHECK(r3.I == StratumIndex::of({0}));

    // Determinant surface, n = 4: u = (6,8,6), m = (3/2,1,1/2).
    const auto det4 = sys(Family::A, 3, 1, 1);
    const auto lam4 = two_omega1(det4);
    CHECK(lam4.coords == RatVec{Rational(3) / 2, Rational(1), Rational(1) / 2});
    const auto r4 = exponents_rel(det4, lam4, StratumIndex{});
    CHECK(r4.a == Rational(12));
    CHECK(r4.b == 1);
    CHECK(r4.I == StratumIndex::of({0, 1}));

    for (const auto& rs : {sys(Family::A, 2), sys(Family::C, 3)}) {
        const auto t = exponents_rel(rs, two_rho(rs), StratumIndex{});
        CHECK(t.a == Rational(1));
        CHECK(t.b == rs.rank);
    }

    CHECK_THROWS_AS(exponents_rel(det3, lam3, StratumIndex::of({0, 1})), ValidationError);
    CHECK_THROWS_AS(exponents_rel(det3, lam3, StratumIndex::of({1})), ValidationError);
}

TEST_CASE("closure poset shapes and reachability") {
    const auto a2 = sys(Family::A, 2);
    const auto chain = closure_poset(a2, two_omega1(a2));
    CHECK(chain.nodes == std::vector<StratumIndex>{StratumIndex{}, StratumIndex::of({0})});
    CHECK(chain.edges == std::vector<std::pair<int, int>>{{0, 1}});

    const auto vee = closure_poset(a2, two_rho(a2));
    CHECK(vee.nodes ==
          std::vector<StratumIndex>{StratumIndex{}, StratumIndex::of({0}), StratumIndex::of({1})});
    CHECK(vee.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    const auto a1 = sys(Family::A, 1);
    const auto point = closure_poset(a1, two_rho(a1));
    CHECK(point.nodes.size() == 1);
    CHECK(point.edges.empty());

    // Reachability along Hasse edges must reproduce strict inclusion, and
    // the edge set must be exactly the cover relation.
    std::mt19937 rng(7103);
    for (const auto& rs : {sys(Family::A, 4), sys(Family::B, 4), sys(Family::D, 4)}) {
        const auto lam = random_dominant(rs, rng);
        const auto p = closure_poset(rs, lam);
        const int n = static_cast<int>(p.nodes.size());
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (const auto& [i, j] : p.edges) reach[i][j] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        std::set<std::pair<int, int>> edges(p.edges.begin(), p.edges.end());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(reach[i][j] == p.nodes[i].proper_subset_of(p.nodes[j]));
                bool cover = p.nodes[i].proper_subset_of(p.nodes[j]);
                for (int k = 0; k < n && cover; ++k)
                    if (p.nodes[i].proper_subset_of(p.nodes[k]) &&
                        p.nodes[k].proper_subset_of(p.nodes[j]))
                        cover = false;
                CHECK(edges.count({i, j}) == static_cast<std::size_t>(cover ? 1 : 0));
            }
        }
    }
}

TEST_CASE("the orthogonal completion J(I)") {
    const auto a2 = sys(Family::A, 2);
    const auto lam = two_omega1(a2);
    CHECK(j_of(a2, lam, StratumIndex{}) == StratumIndex::of({1}));
    CHECK(j_of(a2, lam, StratumIndex::of({0})) == StratumIndex::of({0}));

    for (const auto& rs : {sys(Family::A, 2), sys(Family::B, 2)}) {
        const auto strict = two_rho(rs);
        for (std::uint32_t mask = 0; mask < StratumIndex::full(rs.rank).bits; ++mask)
            CHECK(j_of(rs, strict, StratumIndex{mask}) == StratumIndex{mask});
    }
}

TEST_CASE("invariant-measure criterion") {
    const auto a1 = sys(Family::A, 1, 3, 0);
    CHECK(measure_exists(a1, two_omega1(a1), StratumIndex{}));

    const auto det3 = sys(Family::A, 2, 1, 1);
    CHECK(measure_exists(det3, two_omega1(det3), StratumIndex::of({0})));

    // Orthogonal factors let the criterion fail: lam = alpha_1 + 2 alpha_2
    // leaves alpha_3 orthogonal, and on the resulting two-dimensional face
    // the kernels of 2 rho and lam are different lines.
    const auto triple = orthogonal_triple();
    const Weight skew{rat_vec({1, 2, 0})};
    CHECK(!measure_exists(triple, skew, StratumIndex{}));
    // A balanced weight restores proportionality on that face.
    const Weight balanced{rat_vec({1, 1, 0})};
    CHECK(measure_exists(triple, balanced, StratumIndex{}));
}

TEST_CASE("theta over a region's strata") {
    const auto det3 = sys(Family::A, 2, 1, 1);
    const auto lam3 = two_omega1(det3);
    const auto t = theta_of(det3, lam3, {StratumIndex{}, StratumIndex::of({0})});
    CHECK(t.exponents == ExponentPair{Rational(6), 1});
    CHECK(t.limit_strata == std::vector<StratumIndex>{StratumIndex::of({0})});

    const auto a2 = sys(Family::A, 2);
    const auto r = theta_of(a2, two_rho(a2), {StratumIndex{}});
    CHECK(r.exponents == ExponentPair{Rational(1), 2});
    CHECK(r.limit_strata == std::vector<StratumIndex>{StratumIndex{}});

    // Singleton input repackages exponents_rel.
    const auto single = theta_of(det3, lam3, {StratumIndex::of({0})});
    const auto rel = exponents_rel(det3, lam3, StratumIndex::of({0}));
    CHECK(single.exponents == rel.pair());
    CHECK(single.limit_strata == std::vector<StratumIndex>{rel.I});

    CHECK_THROWS_AS(theta_of(det3, lam3, {}), ValidationError);
}

TEST_CASE("polytope exponents: pinned values") {
    const auto det3 = sys(Family::A, 2, 1, 1);
    const auto lam3 = two_omega1(det3);
    CHECK(polytope_exponents(det3, {lam3}) == PolytopeExponents{Rational(6), 1});

    // Doubling the weight halves the optimum and keeps the face.
    Weight doubled = lam3;
    for (auto& v : doubled.coords) v *= 2;
    CHECK(polytope_exponents(det3, {doubled}) == PolytopeExponents{Rational(3), 1});

    // lambda = 2 rho: the optimal face is the whole chamber slice.
    for (const auto& rs : {sys(Family::A, 2), sys(Family::A, 3), sys(Family::B, 2)}) {
        CHECK(polytope_exponents(rs, {two_rho(rs)}) == PolytopeExponents{Rational(1), rs.rank});
    }

    // Tied ratios: u = (2,2), m = (1,1) gives a two-root optimal face.
    const auto a2 = sys(Family::A, 2);
    CHECK(polytope_exponents(a2, {Weight{rat_vec({1, 1})}}) == PolytopeExponents{Rational(2), 2});

    // Two weights cutting the same polytope: the slice face survives the
    // extra constraint (hand-checked on the orthant form).
    CHECK(polytope_exponents(det3, {lam3, two_rho(det3)}) == PolytopeExponents{Rational(1), 2});

    // A wall weight leaves the polytope unbounded along the wall; the error
    // names a recession ray.
    try {
        polytope_exponents(a2, {Weight{rat_vec({1, 0})}});
        FAIL("expected the unbounded polytope to be rejected");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("recession ray") != std::string::npos);
    }
    CHECK_THROWS_AS(polytope_exponents(a2, {}), ValidationError);
}

TEST_CASE("exponent calculus sweep: dual routes and structure theorems") {
    std::mt19937 rng(7104);
    const RootSystemDesc systems[] = {sys(Family::A, 2),          sys(Family::A, 3, 1, 1),
                                      sys(Family::A, 4),          sys(Family::B, 3),
                                      sys(Family::C, 3, 2, 0),    sys(Family::D, 4),
                                      sys(Family::B, 2, 3, 2)};
    for (const auto& rs : systems) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto lam = random_dominant(rs, rng);
            const auto global = exponents_global(rs, lam);

            // The linear program must reproduce the closed-form exponents.
            const auto lp = polytope_exponents(rs, {lam});
            CHECK(lp.a == global.a);
            CHECK(lp.b == global.b);

            CHECK(exponents_rel(rs, lam, StratumIndex{}) == global);

            const auto connected = enumerate_lambda_connected(rs, lam);
            const auto full = StratumIndex::full(rs.rank);
            for (const auto& I : connected) {
                const auto rel = exponents_rel(rs, lam, I);
                // The accumulation set is lambda-connected, and so is every
                // superset; it admits an invariant measure.
                CHECK(is_lambda_connected(rs, lam, rel.I));
                for (std::uint32_t mask = 0; mask <= full.bits; ++mask) {
                    if ((mask & rel.I.bits) == rel.I.bits)
                        CHECK(is_lambda_connected(rs, lam, StratumIndex{mask & full.bits}));
                }
                if (rel.I.proper_subset_of(full)) CHECK(measure_exists(rs, lam, rel.I));

                // Monotonicity against every lambda-connected superset: the
                // exponent pair never grows, and when the a-values tie the
                // accumulation sets nest.  (Nesting can genuinely fail when
                // a drops: u=(2,2), m=(4/3,5/3) on A_2 sends the empty set
                // to {alpha_2} but {alpha_1} to itself.)
                for (const auto& J : connected) {
                    if (!I.subset_of(J)) continue;
                    const auto relJ = exponents_rel(rs, lam, J);
                    CHECK(!lex_less(rel.pair(), relJ.pair()));
                    if (rel.a == relJ.a) CHECK(rel.I.subset_of(relJ.I));
                }
            }
        }
    }
}

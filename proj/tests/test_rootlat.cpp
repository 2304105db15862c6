#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "satake/rootsystem.hpp"

using namespace satake;

namespace {

std::vector<std::vector<int>> coeff_list(const RootSystemDesc& rs) {
    std::vector<std::vector<int>> out;
    for (const auto& b : rs.positive_roots) out.push_back(b.coeffs);
    return out;
}

RatVec rv(std::initializer_list<const char*> xs) {
    RatVec out;
    for (const char* s : xs) out.push_back(rational_from_string(s));
    return out;
}

} // namespace

TEST_CASE("rational parse and canonical form") {
    CHECK(rational_from_string("4/6") == Rational(2, 3));
    CHECK(rational_from_string("-7/3") == Rational(-7, 3));
    CHECK(rational_from_string("5") == Rational(5));
    CHECK(rational_to_string(Rational(6)) == "6/1");
    CHECK(rational_to_string(Rational(-4, 6)) == "-2/3");
    CHECK_THROWS_AS(rational_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rational_from_string("x"), ValidationError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), ValidationError);
}

TEST_CASE("A2 build: roots, cartan, ordering") {
    const auto rs = build_root_system(Family::A, 2, MultiplicityProfile::uniform(2, 0));
    REQUIRE(rs.positive_roots.size() == 3);
    CHECK(coeff_list(rs) == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(rs.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(rs.simple(0).coeffs == std::vector<int>{1, 0});
    CHECK(rs.simple(1).coeffs == std::vector<int>{0, 1});
    for (const auto& b : rs.positive_roots) {
        CHECK(b.mult_plus == 2);
        CHECK(b.mult_minus == 0);
        CHECK(b.norm2 == 2);
    }
    CHECK(rs.root_name(0) == "alpha_1");
}

TEST_CASE("B2 build: long/short roots") {
    const auto rs = build_root_system(Family::B, 2, MultiplicityProfile::uniform(1, 0));
    CHECK(coeff_list(rs) == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(rs.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
    CHECK(rs.simple_norm2 == std::vector<int>{2, 1});
    // alpha_1 and alpha_1+2 alpha_2 are long, the others short.
    for (const auto& b : rs.positive_roots) {
        const bool is_long = (b.coeffs == std::vector<int>{1, 0}) || (b.coeffs == std::vector<int>{1, 2});
        CHECK(b.norm2 == (is_long ? 2 : 1));
    }
}

TEST_CASE("closure enumeration matches the direct model oracle") {
    struct Case { Family f; int r; };
    for (const auto& [f, r] : {Case{Family::A, 1}, Case{Family::A, 3}, Case{Family::A, 5},
                               Case{Family::B, 2}, Case{Family::B, 3}, Case{Family::B, 4},
                               Case{Family::C, 2}, Case{Family::C, 3}, Case{Family::C, 4},
                               Case{Family::D, 3}, Case{Family::D, 4}, Case{Family::D, 5}}) {
        const auto rs = build_root_system(f, r, MultiplicityProfile::uniform(1, 0));
        CHECK_MESSAGE(coeff_list(rs) == oracles::positive_roots_by_model(f, r),
                      family_name(f), r);
    }
    // Known counts: |A_r| = r(r+1)/2, |B_r| = |C_r| = r^2, |D_r| = r(r-1).
    CHECK(build_root_system(Family::A, 4, MultiplicityProfile::uniform(1, 0)).positive_roots.size() == 10);
    CHECK(build_root_system(Family::B, 5, MultiplicityProfile::uniform(1, 0)).positive_roots.size() == 25);
    CHECK(build_root_system(Family::D, 4, MultiplicityProfile::uniform(1, 0)).positive_roots.size() == 12);
}

TEST_CASE("rank guards and invalid profiles") {
    CHECK_THROWS_AS(build_root_system(Family::D, 2, MultiplicityProfile::uniform(1, 0)), ValidationError);
    CHECK_THROWS_AS(build_root_system(Family::B, 1, MultiplicityProfile::uniform(1, 0)), ValidationError);
    CHECK_THROWS_AS(build_root_system(Family::A, 0, MultiplicityProfile::uniform(1, 0)), ValidationError);
    CHECK_THROWS_AS(build_root_system(Family::A, 33, MultiplicityProfile::uniform(1, 0)), ValidationError);
    CHECK_THROWS_AS(MultiplicityProfile::uniform(0, 0), ValidationError);
    CHECK_THROWS_AS(MultiplicityProfile::uniform(-1, 2), ValidationError);
    // Length-class profile missing a class present in B2.
    const auto p = MultiplicityProfile::by_length({{2, {1, 0}}});
    CHECK_THROWS_AS(build_root_system(Family::B, 2, p), ValidationError);
}

TEST_CASE("per-length-class multiplicities") {
    const auto p = MultiplicityProfile::by_length({{2, {2, 1}}, {1, {0, 3}}});
    const auto rs = build_root_system(Family::B, 2, p);
    for (const auto& b : rs.positive_roots) {
        if (b.norm2 == 2) {
            CHECK(b.mult_plus == 2);
            CHECK(b.mult_minus == 1);
        } else {
            CHECK(b.mult_plus == 0);
            CHECK(b.mult_minus == 3);
        }
    }
}

TEST_CASE("two_rho examples") {
    // A2 with l = 2 everywhere: 2 rho = 2(a1 + a2 + (a1+a2)) = (4,4).
    const auto a2 = build_root_system(Family::A, 2, MultiplicityProfile::uniform(1, 1));
    CHECK(two_rho(a2).coords == rv({"4", "4"}));
    // Rank-1 with l+ = p+q-2, l- = 0 (p=3, q=2): coords (3).
    const auto a1 = build_root_system(Family::A, 1, MultiplicityProfile::uniform(3, 0));
    CHECK(two_rho(a1).coords == rv({"3"}));
    // A3 with l = 1: 2 rho = sum of 6 roots = (3,4,3).
    const auto a3 = build_root_system(Family::A, 3, MultiplicityProfile::uniform(1, 0));
    CHECK(two_rho(a3).coords == rv({"3", "4", "3"}));
}

TEST_CASE("weight_from_fundamental and its inverse") {
    const auto a2 = build_root_system(Family::A, 2, MultiplicityProfile::uniform(2, 0));
    const auto lam = weight_from_fundamental(a2, rv({"2", "0"}));
    CHECK(lam.coords == rv({"4/3", "2/3"}));
    CHECK(fundamental_from_weight(a2, lam) == rv({"2", "0"}));

    const auto a1 = build_root_system(Family::A, 1, MultiplicityProfile::uniform(1, 0));
    CHECK(weight_from_fundamental(a1, rv({"2"})).coords == rv({"1"}));

    // Round trip on random rational vectors.
    std::mt19937 rng(20260818);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    for (const auto& rs : {build_root_system(Family::A, 4, MultiplicityProfile::uniform(1, 0)),
                           build_root_system(Family::B, 3, MultiplicityProfile::uniform(1, 0)),
                           build_root_system(Family::C, 3, MultiplicityProfile::uniform(1, 0)),
                           build_root_system(Family::D, 4, MultiplicityProfile::uniform(1, 0))}) {
        for (int trial = 0; trial < 250; ++trial) {
            RatVec n(rs.rank);
            for (auto& x : n) x = Rational(num(rng), den(rng));
            const auto w = weight_from_fundamental(rs, n);
            CHECK(fundamental_from_weight(rs, w) == n);
        }
    }
}

TEST_CASE("pairing_sign uses the length-corrected pairing") {
    const auto a2 = build_root_system(Family::A, 2, MultiplicityProfile::uniform(1, 1));
    const auto lam = weight_from_fundamental(a2, rv({"2", "0"})); // 2 omega_1
    CHECK(pairing_sign(a2, lam, 1) == Pairing::Zero);
    CHECK(pairing_sign(a2, lam, 0) == Pairing::NonZero);
    CHECK_THROWS_AS(pairing_sign(a2, lam, 2), ValidationError);
    CHECK_THROWS_AS(pairing_sign(a2, lam, -1), ValidationError);

    // B2: alpha_1 + alpha_2 = e_1 in the model, orthogonal to alpha_2 = e_2 but
    // not to alpha_1 = e_1 - e_2.  The bare Cartan pairing would get both wrong.
    const auto b2 = build_root_system(Family::B, 2, MultiplicityProfile::uniform(1, 0));
    const Weight beta{rv({"1", "1"})};
    CHECK(pairing_sign(b2, beta, 1) == Pairing::Zero);
    CHECK(pairing_sign(b2, beta, 0) == Pairing::NonZero);
}

TEST_CASE("gram matrix is symmetric and matches the model") {
    for (const auto& rs : {build_root_system(Family::A, 3, MultiplicityProfile::uniform(1, 0)),
                           build_root_system(Family::B, 3, MultiplicityProfile::uniform(1, 0)),
                           build_root_system(Family::C, 3, MultiplicityProfile::uniform(1, 0)),
                           build_root_system(Family::D, 4, MultiplicityProfile::uniform(1, 0))}) {
        const auto g = gram_matrix(rs);
        for (int i = 0; i < rs.rank; ++i) {
            CHECK(g[i][i] == Rational(rs.simple_norm2[i]));
            for (int j = 0; j < rs.rank; ++j) CHECK(g[i][j] == g[j][i]);
        }
    }
    const auto b2 = build_root_system(Family::B, 2, MultiplicityProfile::uniform(1, 0));
    CHECK(gram_matrix(b2) == RatMat{{Rational(2), Rational(-1)}, {Rational(-1), Rational(1)}});
}

TEST_CASE("kernel_subspace: A2 single simple root") {
    const auto a2 = build_root_system(Family::A, 2, MultiplicityProfile::uniform(1, 0));
    const Weight alpha1{rv({"1", "0"})};
    const auto ker = kernel_subspace(a2, {alpha1});
    REQUIRE(ker.dim() == 1);
    // alpha_1 evaluates as 2 t_1 - t_2, so the kernel is spanned by (1, 2).
    CHECK(ker.contains(rv({"1", "2"})));
    CHECK(!ker.contains(rv({"1", "0"})));
    CHECK(ker.basis == RatMat{rv({"1", "2"})});
}

TEST_CASE("kernel_subspace: degenerate inputs") {
    const auto a3 = build_root_system(Family::A, 3, MultiplicityProfile::uniform(1, 0));
    // No functionals: the whole space.
    CHECK(kernel_subspace(a3, {}).dim() == 3);
    // Dependent family {lam, 2 lam} has the same kernel as {lam}.
    const Weight lam{rv({"1", "2", "1"})};
    Weight lam2 = lam;
    for (auto& c : lam2.coords) c *= 2;
    CHECK(kernel_subspace(a3, {lam, lam2}) == kernel_subspace(a3, {lam}));
}

TEST_CASE("kernel_subspace monotonicity on random instances") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-5, 5);
    const auto rs = build_root_system(Family::A, 4, MultiplicityProfile::uniform(1, 0));
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Weight> f1, f2;
        for (int i = 0; i < 2; ++i) {
            Weight w;
            for (int j = 0; j < 4; ++j) w.coords.emplace_back(num(rng));
            f1.push_back(w);
        }
        f2 = f1;
        Weight extra;
        for (int j = 0; j < 4; ++j) extra.coords.emplace_back(num(rng));
        f2.push_back(extra);
        CHECK(kernel_subspace(rs, f1).contains(kernel_subspace(rs, f2)));
    }
}

TEST_CASE("explicit systems: rebuild A2, symmetrizability checks") {
    const auto a2 = build_root_system(Family::A, 2, MultiplicityProfile::uniform(1, 1));
    std::vector<ExplicitRoot> roots;
    for (const auto& b : a2.positive_roots) roots.push_back({b.coeffs, b.mult_plus, b.mult_minus});
    const auto rebuilt = build_explicit_root_system(2, a2.cartan, roots);
    CHECK(coeff_list(rebuilt) == coeff_list(a2));
    // Lengths are recovered up to overall scale and stored gcd-normalized;
    // every downstream use (kernels, pairing signs, polytopes) is scale-free.
    CHECK(rebuilt.simple_norm2 == std::vector<int>{1, 1});
    CHECK(two_rho(rebuilt).coords == two_rho(a2).coords);
    const Weight probe{rv({"4/3", "2/3"})};
    CHECK(pairing_sign(rebuilt, probe, 1) == pairing_sign(a2, probe, 1));
    CHECK(kernel_subspace(rebuilt, {probe}) == kernel_subspace(a2, {probe}));

    // B2 Cartan: derived lengths put the short root at half the long one.
    const auto b2 = build_root_system(Family::B, 2, MultiplicityProfile::uniform(1, 0));
    std::vector<ExplicitRoot> broots;
    for (const auto& b : b2.positive_roots) broots.push_back({b.coeffs, 1, 0});
    const auto eb2 = build_explicit_root_system(2, {{2, -2}, {-1, 2}}, broots);
    CHECK(eb2.simple_norm2 == std::vector<int>{2, 1});
    CHECK(gram_matrix(eb2) == gram_matrix(b2));

    // A triangle with incompatible markings is not symmetrizable.
    const std::vector<std::vector<int>> bad = {{2, -1, -2}, {-1, 2, -1}, {-1, -1, 2}};
    std::vector<ExplicitRoot> unit3 = {{{1, 0, 0}, 1, 0}, {{0, 1, 0}, 1, 0}, {{0, 0, 1}, 1, 0}};
    CHECK_THROWS_AS(build_explicit_root_system(3, bad, unit3), ValidationError);

    // An affine matrix is symmetrizable but not of finite type.
    const std::vector<std::vector<int>> affine = {{2, -2}, {-2, 2}};
    std::vector<ExplicitRoot> unit2 = {{{1, 0}, 1, 0}, {{0, 1}, 1, 0}};
    CHECK_THROWS_AS(build_explicit_root_system(2, affine, unit2), ValidationError);

    // Missing simple root and duplicate root are rejected.
    CHECK_THROWS_AS(build_explicit_root_system(2, a2.cartan, {{{1, 0}, 1, 0}}), ValidationError);
    CHECK_THROWS_AS(build_explicit_root_system(
                        2, a2.cartan,
                        {{{1, 0}, 1, 0}, {{0, 1}, 1, 0}, {{0, 1}, 1, 0}}),
                    ValidationError);
    // Zero multiplicity pair is rejected.
    CHECK_THROWS_AS(build_explicit_root_system(
                        2, a2.cartan,
                        {{{1, 0}, 0, 0}, {{0, 1}, 1, 0}}),
                    ValidationError);
}

TEST_CASE("linalg: determinant and rref basics") {
    RatMat m = {rat_vec({2, 1}), rat_vec({1, 2})};
    CHECK(determinant(m) == Rational(3));
    CHECK(rank_of(m) == 2);
    RatMat sing = {rat_vec({1, 2}), rat_vec({2, 4})};
    CHECK(determinant(sing) == Rational(0));
    CHECK(rank_of(sing) == 1);
    const auto ker = kernel_of_rows({rat_vec({1, 2})}, 2);
    REQUIRE(ker.size() == 1);
    CHECK(dot(ker[0], rat_vec({1, 2})) == Rational(0));
}

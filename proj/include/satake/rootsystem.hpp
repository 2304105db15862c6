#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

// Restricted root systems of the classical families, with per-root multiplicity
// data (mult_plus, mult_minus).  Everything here is exact rational arithmetic.
//
// Conventions, shared by every module downstream:
//  * Weights are stored by their coordinates in the simple-root basis.
//  * cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>.
//  * Chamber points carry coordinates t = (t_1..t_r) dual to the simple roots
//    via the Cartan pairing: a weight w evaluates as
//        w(t) = sum_i coords_i * sum_j C_ji t_j,
//    with explicit root-length normalization for non-simply-laced types.
//    Concretely eval_covector returns G*coords where G = C * diag(<a_j,a_j>/2)
//    is the Gram matrix; for A/D (all lengths equal 2) G coincides with C and
//    the formula above holds verbatim.  Simple-root evaluation vectors are the
//    Gram columns, so chamber and kernels match the underlying Killing geometry
//    in every type.

enum class Family { A, B, C, D, Explicit };

std::string family_name(Family f);

struct PositiveRoot {
    std::vector<int> coeffs; // in the simple-root basis, all >= 0
    int norm2 = 2;           // squared length in the standard coordinate model
    int mult_plus = 1;       // dim of the +1 eigenspace of the involution pair
    int mult_minus = 0;      // dim of the -1 eigenspace
    int mult() const { return mult_plus + mult_minus; }
    bool is_simple() const;
};

struct RootSystemDesc {
    int rank = 0;
    Family family = Family::A;
    std::vector<PositiveRoot> positive_roots; // lexicographic by coeff vector
    std::vector<std::vector<int>> cartan;     // C[i][j] = 2<a_i,a_j>/<a_j,a_j>
    std::vector<int> simple_norm2;            // <a_i,a_i> in the standard model

    const PositiveRoot& simple(int i) const;  // the root with coeffs = e_i
    std::string root_name(int i) const;       // "alpha_1".. (1-based)
};

// Uniform multiplicities, or multiplicities keyed by squared root length
// (restricted systems often have distinct multiplicities per length class).
struct MultiplicityProfile {
    static MultiplicityProfile uniform(int lp, int lm);
    static MultiplicityProfile by_length(std::map<int, std::pair<int, int>> table);

    std::pair<int, int> lookup(int norm2) const;

    std::optional<std::pair<int, int>> uniform_value;
    std::map<int, std::pair<int, int>> length_table;
};

// Positive roots are generated by closure: starting from the simple roots,
// repeatedly add simple roots and keep the sums that are roots in the family's
// standard coordinate model.  Rank bounds: A >= 1, B/C >= 2, D >= 3; all <= 32.
RootSystemDesc build_root_system(Family family, int rank, const MultiplicityProfile& profile);

// Arbitrary reduced system given by its positive roots and Cartan matrix with
// per-root multiplicities.  Validates: unit vectors present, coefficients
// nonnegative, Cartan integrality/sign pattern, and symmetrizability (root
// lengths are recovered from the Cartan matrix, so inconsistent input is
// rejected).
struct ExplicitRoot {
    std::vector<int> coeffs;
    int mult_plus = 1;
    int mult_minus = 0;
};
RootSystemDesc build_explicit_root_system(int rank,
                                          const std::vector<std::vector<int>>& cartan,
                                          const std::vector<ExplicitRoot>& roots);

struct Weight {
    RatVec coords; // simple-root basis
    bool operator==(const Weight&) const = default;
};

// 2*rho = sum over positive roots of (mult_plus + mult_minus) * root.
Weight two_rho(const RootSystemDesc& rs);

// Simple-root coordinates of sum_i n_i * omega_i: solves C^T m = n exactly.
Weight weight_from_fundamental(const RootSystemDesc& rs, const RatVec& n);

// Inverse of the above: n = C^T m.
RatVec fundamental_from_weight(const RootSystemDesc& rs, const Weight& w);

enum class Pairing { Zero, NonZero };

// Whether <lam, alpha_i> = 0, exactly, via the Cartan matrix and root-length
// data (the Gram pairing).
Pairing pairing_sign(const RootSystemDesc& rs, const Weight& lam, int i);

// Gram matrix G = C * diag(<a_j,a_j>/2), symmetric.
RatMat gram_matrix(const RootSystemDesc& rs);

// Evaluation vector of a weight on chamber coordinates: e(w) = G * coords,
// i.e. w(t) = e(w) . t.
RatVec eval_covector(const RootSystemDesc& rs, const Weight& w);

// { t : w(t) = 0 for every functional }, as a canonical subspace.
RationalSubspace kernel_subspace(const RootSystemDesc& rs, const std::vector<Weight>& functionals);

} // namespace satake

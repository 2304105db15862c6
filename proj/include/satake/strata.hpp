#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "satake/rootsystem.hpp"

namespace satake {

// Boundary-stratum combinatorics over a restricted root system: which
// subsets of the simple roots index nonredundant strata at infinity, the
// growth-exponent calculus (a, b, I) read off 2*rho and lambda, the closure
// poset, and the equivalent linear program over the weight polytope.

struct StratumIndex {
    std::uint32_t bits = 0;

    static StratumIndex of(std::initializer_list<int> members);
    static StratumIndex of(const std::vector<int>& members);
    static StratumIndex full(int rank);

    bool contains(int i) const { return (bits >> static_cast<unsigned>(i)) & 1u; }
    bool subset_of(const StratumIndex& o) const { return (bits & ~o.bits) == 0; }
    bool proper_subset_of(const StratumIndex& o) const {
        return subset_of(o) && bits != o.bits;
    }
    int size() const;
    std::vector<int> members() const; // ascending

    bool operator==(const StratumIndex&) const = default;
};

struct ExponentPair {
    Rational a;
    int b = 1;
    bool operator==(const ExponentPair&) const = default;
};

// Lexicographic order on (a, b): larger a first, then larger b.  Bigger
// pairs dominate the counting law.
bool lex_less(const ExponentPair& x, const ExponentPair& y);

struct ExponentTriple {
    Rational a;
    int b = 1;       // #(simple roots outside I); always >= 1
    StratumIndex I;  // the accumulation stratum

    ExponentPair pair() const { return {a, b}; }
    bool operator==(const ExponentTriple&) const = default;
};

// Whether the diagram of I together with lam is connected: edges between
// simple roots where the Cartan entry is nonzero, edges to lam where the
// Gram pairing is nonzero.  The empty set counts as connected.
bool is_lambda_connected(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I);

// All proper lambda-connected subsets, sorted by (size, bitmask); always
// includes the empty set.  Guarded to rank <= 24.
std::vector<StratumIndex> enumerate_lambda_connected(const RootSystemDesc& rs, const Weight& lam);

// Union of all lambda-connected subsets of J: the connected component of lam
// in the diagram of J together with lam, minus lam itself.
StratumIndex largest_lambda_connected(const RootSystemDesc& rs, const Weight& lam,
                                      const StratumIndex& J);

// Global exponent triple: with u the simple-root coordinates of 2*rho and m
// those of lam (all required positive),
//   a = max_alpha u_alpha / m_alpha,
//   I = { alpha : u_alpha / m_alpha < a },
//   b = #(Delta \ I).
ExponentTriple exponents_global(const RootSystemDesc& rs, const Weight& lam);

// Relative version for a stratum I: the max runs over Delta \ I only, and
// the complement roots with ratio below the max join I.  Requires I to be a
// proper lambda-connected subset; exponents_rel(empty) == exponents_global.
ExponentTriple exponents_rel(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I);

// Hasse diagram of strict inclusion on the proper lambda-connected subsets:
// nodes sorted by (size, bitmask), edge (i, j) when nodes[i] is a proper
// subset of nodes[j] with no lambda-connected set strictly between.
// Reachability along edges recovers the full inclusion order.
struct ClosurePoset {
    std::vector<StratumIndex> nodes;
    std::vector<std::pair<int, int>> edges;
};
ClosurePoset closure_poset(const RootSystemDesc& rs, const Weight& lam);

// J(I) = I together with every simple root outside I orthogonal to lam and
// to every root of I (Gram pairings, exact).
StratumIndex j_of(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I);

// Invariant-measure criterion for the stratum indexed by I: with J = J(I)
// and a_J the common kernel of the roots in J, tests whether a_J meets
// ker(2 rho) and ker(lam) in the same subspace.
bool measure_exists(const RootSystemDesc& rs, const Weight& lam, const StratumIndex& I);

// Max of exponents_rel over a nonempty family of strata (lexicographic on
// (a, b)), together with the accumulation sets of the maximizers,
// deduplicated and sorted by (size, bitmask).
struct ThetaResult {
    ExponentPair exponents;
    std::vector<StratumIndex> limit_strata;
};
ThetaResult theta_of(const RootSystemDesc& rs, const Weight& lam,
                     const std::vector<StratumIndex>& strata);

// LP route to the same exponents: maximize 2rho(t) over
//   { t in the closed chamber : w(t) <= 1 for every w in weights }
// by exact rational simplex.  a is the optimum and b is 1 plus the dimension
// of the optimal face.  Throws ValidationError if the polytope is unbounded;
// the message carries a violating recession ray.
struct PolytopeExponents {
    Rational a;
    int b = 1;
    bool operator==(const PolytopeExponents&) const = default;
};
PolytopeExponents polytope_exponents(const RootSystemDesc& rs, const std::vector<Weight>& weights);

} // namespace satake

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/families.hpp"
#include "satake/rootsystem.hpp"

namespace satake {

// A named example: root-system data plus (when the example is an affine
// variety with an integral model) the matching point family.
struct Preset {
    std::string name; // canonical form, e.g. "detsurface:3,1"
    RootSystemDesc rs;
    Weight lam;
    std::optional<PointFamily> family; // empty for the group-weight examples
};

// Parses and instantiates "kind:args":
//   quadric:p,q[,k]      rank-1 system, multiplicities (q-1, p-1), lam = 2 omega_1
//   detsurface:n[,k]     A_{n-1}, multiplicities (1,1), lam = 2 omega_1
//   symmat:p,q           A_{p+q-1}, multiplicities (1,0), lam = 2 omega_1
//   tworho:family,rank[,ell]  lam = 2 ell rho (no point family)
// The norm is a separate runtime choice and defaults to Euclidean.
Preset lookup_preset(const std::string& text, NormKind norm = NormKind::Euclidean);

// Parses just the point family from "kind:args" (quadric / detsurface /
// symmat), without building the root-system side.  This also covers integral
// models whose group-side data is degenerate, e.g. quadric:1,1,2.
PointFamily parse_family(const std::string& text, NormKind norm = NormKind::Euclidean);

// One usage line per preset kind, for error messages and the CLI listing.
std::vector<std::string> preset_usage();

} // namespace satake

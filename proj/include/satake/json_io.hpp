#pragma once

#include <string>
#include <vector>

#include "satake/counter.hpp"
#include "satake/rootsystem.hpp"
#include "satake/strata.hpp"
#include "satake/volasym.hpp"

namespace satake {

// Declarative test-function description: the serializable counterpart of the
// opaque TestFunction.
struct BumpSpec {
    std::string kind = "radial"; // "radial" | "log_radial"
    double r0 = 0.5;             // radial: inner plateau radius
    double r1 = 1.0;             // radial: support radius
    double flat = 0.4;           // log_radial: plateau half-width in log radius
    double cut = 1.0;            // log_radial: support half-width in log radius
    double power = 0.0;          // log_radial: radial weight exponent
    bool operator==(const BumpSpec&) const = default;
};

TestFunction make_bump(const BumpSpec& spec);

std::string bump_to_json(const BumpSpec& spec);
BumpSpec bump_from_json(const std::string& text);

// Exponential-map spec with rationals in canonical "p/q" form, e.g.
// {"rank":2,"lead":0,"chi":["2/1","2/1"],"terms":[{"lam":["1/1","1/1"],"w":[1.0]}]}
std::string exp_map_spec_to_json(const ExpMapSpec& spec);
ExpMapSpec exp_map_spec_from_json(const std::string& text);

// {"a":"6/1","b":1,"I":["alpha_1"]} with the system's root names.
std::string exponent_triple_to_json(const RootSystemDesc& rs, const ExponentTriple& t);

// Orchestration manifest for the report subcommand.  Unknown keys are
// rejected; absent optional keys keep their defaults.
struct RunManifest {
    std::string preset;
    std::vector<std::string> tasks; // subset of exponents/strata/volume/count/compare
    std::vector<double> ladder;
    std::string output_dir = ".";
    long long seed = 0;
    std::string norm = "euclidean"; // or "sup"
    double compare_T = 100.0;
    int bins = 32;
    std::vector<CapSpec> caps;
    BumpSpec bump;
    double fit_tolerance = 0.25;   // |a_fit - a_predicted| allowed by the count check
    double ks_threshold = 0.1;     // KS distance allowed by the compare check
    double volume_tolerance = 0.1; // |ratio/target - 1| allowed by the volume check
    long long budget = -1;         // enumeration candidate budget (< 0: unlimited)
    bool operator==(const RunManifest&) const = default;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

// RFC 4180 serialization: fields quoted when needed, CRLF line endings.
std::string csv_join(const std::vector<std::vector<std::string>>& rows);

// Deterministic short decimal form used in CSV output.
std::string format_double(double v);

} // namespace satake

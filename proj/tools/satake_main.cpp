// satake: boundary-stratification exponents, volume asymptotics, and integer
// point counts for the built-in affine symmetric variety presets.
//
// Exit codes: 0 success (and all report checks pass), 1 a report check
// failed, 2 invalid input, 3 compute budget exhausted (partial outputs are
// kept), 4 internal cross-check failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "satake/counter.hpp"
#include "satake/errors.hpp"
#include "satake/json_io.hpp"
#include "satake/presets.hpp"
#include "satake/rootsystem.hpp"
#include "satake/strata.hpp"
#include "satake/volasym.hpp"

using namespace satake;
using nlohmann::json;

namespace {

struct GlobalOpts {
    int threads = 1;
    long long budget = -1; // < 0: module defaults
    long long seed = 0;    // reserved for stochastic fallbacks; recorded in reports
    std::string out;       // output file (subcommands) / directory override (report)
};

void add_globals(CLI::App* cmd, GlobalOpts& gl) {
    cmd->add_option("--threads", gl.threads, "worker threads for quadrature")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-evals", gl.budget,
                    "evaluation / candidate budget (default: per-module)");
    cmd->add_option("--seed", gl.seed, "seed for stochastic fallbacks (outputs are "
                                       "deterministic; recorded in reports)");
    cmd->add_option("--out", gl.out, "output file; for report, overrides the manifest's "
                                     "output_dir");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Writes to the --out file when given, else to stdout.
void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file '" + out_path + "'");
    f << content;
    if (!f.good()) throw ValidationError("failed writing output file '" + out_path + "'");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file '" + path.string() + "'");
    f << content;
    if (!f.good()) throw ValidationError("failed writing output file '" + path.string() + "'");
}

double safe_stod(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw ValidationError("trailing junk in " + what + ": '" + text + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ValidationError("cannot parse " + what + ": '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("out-of-range " + what + ": '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "50:800:x2" (geometric, inclusive) or "100,1000,10000".
std::vector<double> parse_ladder(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3 || parts[2].empty() || parts[2][0] != 'x')
            throw ValidationError("ladder must be 'start:end:xFACTOR' or a comma list, got '" +
                                  text + "'");
        const double start = safe_stod(parts[0], "ladder start");
        const double end = safe_stod(parts[1], "ladder end");
        const double factor = safe_stod(parts[2].substr(1), "ladder factor");
        if (!(start > 0.0) || !(end >= start) || !(factor > 1.0))
            throw ValidationError("ladder needs 0 < start <= end and factor > 1");
        for (double t = start; t <= end * (1.0 + 1e-9); t *= factor) out.push_back(t);
    } else {
        for (const std::string& part : split(text, ','))
            out.push_back(safe_stod(part, "ladder entry"));
    }
    if (out.empty()) throw ValidationError("empty T ladder");
    return out;
}

// "c1,c2,...,cd@eps"; the center is normalized to unit length.
CapSpec parse_cap(const std::string& text) {
    const auto at = text.rfind('@');
    if (at == std::string::npos)
        throw ValidationError("cap must be 'c1,c2,...@radius', got '" + text + "'");
    CapSpec cap;
    cap.radius = safe_stod(text.substr(at + 1), "cap radius");
    double n2 = 0.0;
    for (const std::string& part : split(text.substr(0, at), ',')) {
        cap.center.push_back(safe_stod(part, "cap coordinate"));
        n2 += cap.center.back() * cap.center.back();
    }
    if (!(n2 > 0.0)) throw ValidationError("cap center must be nonzero");
    for (double& c : cap.center) c /= std::sqrt(n2);
    return cap;
}

NormKind parse_norm(const std::string& text) {
    if (text == "euclidean") return NormKind::Euclidean;
    if (text == "sup") return NormKind::Sup;
    throw ValidationError("norm must be 'euclidean' or 'sup', got '" + text + "'");
}

// The family behind --preset/--family (exactly one must be given).
PointFamily resolve_family(const std::string& preset_text, const std::string& family_text,
                           NormKind norm, std::string* preset_name = nullptr) {
    if (preset_text.empty() == family_text.empty())
        throw ValidationError("give exactly one of --preset or --family");
    if (!family_text.empty()) {
        if (preset_name) *preset_name = family_text;
        return parse_family(family_text, norm);
    }
    const Preset ps = lookup_preset(preset_text, norm);
    if (!ps.family.has_value())
        throw ValidationError("preset '" + ps.name + "' has no integral point family");
    if (preset_name) *preset_name = ps.name;
    return *ps.family;
}

// Volume spec induced by a preset: the single term e^{lam(x)} * 1 with
// chi = 2 rho, the renormalized-volume character of the group side.
ExpMapSpec preset_spec(const Preset& ps) {
    ExpMapSpec spec;
    spec.rank = ps.rs.rank;
    ExpTerm term;
    term.lam = ps.lam;
    term.w = {1.0};
    spec.terms.push_back(std::move(term));
    spec.lead = 0;
    spec.chi = two_rho(ps.rs);
    validate_spec(spec);
    return spec;
}

json strata_json(const Preset& ps) {
    const auto conn = enumerate_lambda_connected(ps.rs, ps.lam);
    const ClosurePoset poset = closure_poset(ps.rs, ps.lam);
    const ExponentTriple g = exponents_global(ps.rs, ps.lam);

    json j;
    j["preset"] = ps.name;
    json lc = json::array();
    for (const StratumIndex& I : conn) lc.push_back(I.members());
    j["lambda_connected"] = std::move(lc);
    j["exponents"] = {{"a", rational_to_string(g.a)}, {"b", g.b}, {"I", g.I.members()}};
    json rows = json::array();
    for (const StratumIndex& I : conn) {
        const ExponentTriple r = exponents_rel(ps.rs, ps.lam, I);
        json row;
        row["I"] = I.members();
        row["a"] = rational_to_string(r.a);
        row["b"] = r.b;
        row["accumulation"] = r.I.members();
        row["measure_exists"] = measure_exists(ps.rs, ps.lam, I);
        rows.push_back(std::move(row));
    }
    j["strata"] = std::move(rows);
    json edges = json::array();
    for (const auto& [x, y] : poset.edges) edges.push_back(json::array({x, y}));
    j["poset_edges"] = std::move(edges);
    return j;
}

std::string poset_dot(const Preset& ps) {
    const ClosurePoset poset = closure_poset(ps.rs, ps.lam);
    std::ostringstream out;
    out << "digraph closure_poset {\n  rankdir=BT;\n";
    for (size_t i = 0; i < poset.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"{";
        bool first = true;
        for (int m : poset.nodes[i].members()) {
            if (!first) out << ", ";
            out << ps.rs.root_name(m);
            first = false;
        }
        out << "}\"];\n";
    }
    for (const auto& [x, y] : poset.edges) out << "  n" << x << " -> n" << y << ";\n";
    out << "}\n";
    return out.str();
}

// --------------------------------------------------------------------------
// subcommand drivers

void run_presets() {
    for (const std::string& line : preset_usage()) std::cout << line << "\n";
}

void run_exponents(const std::string& preset_text, bool with_polytope, const GlobalOpts& gl) {
    const Preset ps = lookup_preset(preset_text);
    const ExponentTriple t = exponents_global(ps.rs, ps.lam);
    json j = json::parse(exponent_triple_to_json(ps.rs, t));
    j["preset"] = ps.name;
    if (with_polytope) {
        const PolytopeExponents pe = polytope_exponents(ps.rs, {ps.lam});
        if (pe.a != t.a || pe.b != t.b)
            throw InternalError("polytope route (" + rational_to_string(pe.a) + ", b=" +
                                std::to_string(pe.b) + ") disagrees with the closed form (" +
                                rational_to_string(t.a) + ", b=" + std::to_string(t.b) + ")");
        j["polytope"] = {{"a", rational_to_string(pe.a)}, {"b", pe.b}};
    }
    emit(gl.out, j.dump(2) + "\n");
}

void run_strata(const std::string& preset_text, const std::string& dot_path,
                const GlobalOpts& gl) {
    const Preset ps = lookup_preset(preset_text);
    emit(gl.out, strata_json(ps).dump(2) + "\n");
    if (!dot_path.empty()) write_file(dot_path, poset_dot(ps));
}

// Scans the ladder once; the plain integral is recovered from the normalized
// one, so each rung costs a single quadrature pass.
std::vector<std::vector<std::string>> volume_rows(const ExpMapSpec& spec, const TestFunction& f,
                                                  const std::vector<double>& ladder,
                                                  const VolOptions& vopts, double* target_out) {
    const ExponentTriple tri = chi_exponents(spec);
    const double a = to_double(tri.a);
    const double target = kappa_chi(spec) * l_chi(spec, f, vopts);
    if (target_out) *target_out = target;

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"T", "integral", "normalized_ratio", "kappa_L_target"});
    for (double T : ladder) {
        const double normalized = finite_t_normalized(spec, f, T, vopts);
        const double integral =
            normalized * std::pow(T, a) * std::pow(std::log(T), double(tri.b - 1));
        rows.push_back({format_double(T), format_double(integral), format_double(normalized),
                        format_double(target)});
    }
    return rows;
}

void run_volume(const std::string& preset_text, const std::string& spec_path,
                const std::string& ladder_text, const std::string& bump_text,
                const GlobalOpts& gl) {
    if (preset_text.empty() == spec_path.empty())
        throw ValidationError("give exactly one of --preset or --spec");
    const ExpMapSpec spec = spec_path.empty()
                                ? preset_spec(lookup_preset(preset_text))
                                : exp_map_spec_from_json(read_file(spec_path));
    const BumpSpec bs = bump_text.empty() ? BumpSpec{} : bump_from_json(bump_text);
    const TestFunction f = make_bump(bs);
    VolOptions vopts;
    vopts.threads = gl.threads;
    if (gl.budget > 0) vopts.budget = gl.budget;

    const std::vector<double> ladder = parse_ladder(ladder_text);
    const auto rows = volume_rows(spec, f, ladder, vopts, nullptr);
    emit(gl.out, csv_join(rows));
}

void run_count(const std::string& preset_text, const std::string& family_text,
               const std::string& norm_text, const std::string& ladder_text,
               const std::vector<std::string>& cap_texts, const GlobalOpts& gl) {
    const PointFamily fam = resolve_family(preset_text, family_text, parse_norm(norm_text));
    std::vector<CapSpec> caps;
    for (const std::string& text : cap_texts) caps.push_back(parse_cap(text));
    CountOptions copts;
    if (gl.budget > 0) copts.candidate_budget = gl.budget;

    const LadderResult res = count_ladder(fam, caps, parse_ladder(ladder_text), copts);

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"T", "total"};
    for (size_t i = 0; i < caps.size(); ++i) header.push_back("cap_" + std::to_string(i));
    header.push_back("elapsed_ms");
    rows.push_back(std::move(header));
    for (const CountRecord& rec : res.records) {
        std::vector<std::string> row{format_double(rec.T), std::to_string(rec.total)};
        for (long long c : rec.per_cap) row.push_back(std::to_string(c));
        row.push_back(std::to_string(rec.elapsed_ms));
        rows.push_back(std::move(row));
    }
    emit(gl.out, csv_join(rows));
    if (res.truncated)
        throw BudgetExceeded("enumeration candidate budget exhausted; partial ladder kept",
                             static_cast<double>(res.records.size()), gl.budget);
}

std::vector<std::vector<std::string>> compare_rows(const AngularResult& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"bin_lo", "bin_hi", "empirical", "predicted"});
    for (const HistogramRow& h : r.histogram)
        rows.push_back({format_double(h.bin_lo), format_double(h.bin_hi),
                        format_double(h.empirical), format_double(h.predicted)});
    return rows;
}

void run_compare(const std::string& preset_text, const std::string& family_text,
                 const std::string& norm_text, double T, int bins, const GlobalOpts& gl) {
    std::string name;
    const PointFamily fam = resolve_family(preset_text, family_text, parse_norm(norm_text), &name);
    const AngularResult r = angular_compare(fam, T, bins);

    json summary;
    summary["preset"] = name;
    summary["T"] = T;
    summary["bins"] = bins;
    summary["ks_distance"] = r.ks_distance;
    summary["points"] = r.points;

    const std::string csv = csv_join(compare_rows(r));
    if (gl.out.empty()) {
        // CSV on stdout stays machine-readable; the summary goes to stderr.
        std::cout << csv;
        std::cerr << summary.dump(2) << "\n";
    } else {
        emit(gl.out, csv);
        std::cout << summary.dump(2) << "\n";
    }
}

int run_report(const std::string& manifest_path, const GlobalOpts& gl) {
    const RunManifest m = manifest_from_json(read_file(manifest_path));
    const NormKind norm = parse_norm(m.norm);
    const Preset ps = lookup_preset(m.preset, norm);
    const std::filesystem::path outdir = gl.out.empty() ? m.output_dir : gl.out;
    std::filesystem::create_directories(outdir);

    json summary;
    summary["preset"] = ps.name;
    summary["tasks"] = m.tasks;
    summary["seed"] = m.seed;
    json results = json::object();
    json checks = json::array();
    bool truncated = false;

    const ExponentTriple predicted = exponents_global(ps.rs, ps.lam);

    for (const std::string& task : m.tasks) {
        if (task == "exponents") {
            json j = json::parse(exponent_triple_to_json(ps.rs, predicted));
            j["preset"] = ps.name;
            write_file(outdir / "exponents.json", j.dump(2) + "\n");
            results["exponents"] = std::move(j);
        } else if (task == "strata") {
            const json j = strata_json(ps);
            write_file(outdir / "strata.json", j.dump(2) + "\n");
            results["strata"] = {{"lambda_connected", j.at("lambda_connected").size()},
                                 {"poset_edges", j.at("poset_edges").size()}};
        } else if (task == "volume") {
            if (m.ladder.empty())
                throw ValidationError("the volume task requires a nonempty ladder");
            VolOptions vopts;
            vopts.threads = gl.threads;
            if (gl.budget > 0) vopts.budget = gl.budget;
            const ExpMapSpec spec = preset_spec(ps);
            double target = 0.0;
            const auto rows = volume_rows(spec, make_bump(m.bump), m.ladder, vopts, &target);
            write_file(outdir / "volume.csv", csv_join(rows));
            const double last = safe_stod(rows.back()[2], "normalized ratio");
            const double rel_err = std::abs(last / target - 1.0);
            results["volume"] = {{"kappa_L_target", target},
                                 {"last_normalized", last},
                                 {"rel_error", rel_err}};
            checks.push_back({{"name", "volume_ratio"},
                              {"pass", rel_err <= m.volume_tolerance},
                              {"detail", "|ratio/target - 1| = " + format_double(rel_err) +
                                             " vs tolerance " + format_double(m.volume_tolerance)}});
        } else if (task == "count") {
            if (!ps.family.has_value())
                throw ValidationError("preset '" + ps.name + "' has no integral point family");
            CountOptions copts;
            copts.candidate_budget = gl.budget > 0 ? gl.budget : m.budget;
            const LadderResult res = count_ladder(*ps.family, m.caps, m.ladder, copts);
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{"T", "total"};
            for (size_t i = 0; i < m.caps.size(); ++i)
                header.push_back("cap_" + std::to_string(i));
            header.push_back("elapsed_ms");
            rows.push_back(std::move(header));
            for (const CountRecord& rec : res.records) {
                std::vector<std::string> row{format_double(rec.T), std::to_string(rec.total)};
                for (long long c : rec.per_cap) row.push_back(std::to_string(c));
                row.push_back(std::to_string(rec.elapsed_ms));
                rows.push_back(std::move(row));
            }
            write_file(outdir / "counts.csv", csv_join(rows));
            json jc;
            jc["a_predicted"] = rational_to_string(predicted.a);
            jc["b"] = predicted.b;
            jc["rungs"] = res.records.size();
            jc["truncated"] = res.truncated;
            truncated = truncated || res.truncated;
            if (m.ladder.size() >= 4) {
                try {
                    const ExponentFit fit = fit_exponent(res.records, predicted.b);
                    const double a_pred = to_double(predicted.a);
                    jc["a_fit"] = fit.a_fit;
                    jc["a_stderr"] = fit.a_stderr;
                    checks.push_back(
                        {{"name", "count_fit"},
                         {"pass", std::abs(fit.a_fit - a_pred) <= m.fit_tolerance},
                         {"detail", "a_fit = " + format_double(fit.a_fit) + " vs predicted " +
                                        format_double(a_pred) + " (tolerance " +
                                        format_double(m.fit_tolerance) + ")"}});
                } catch (const ValidationError& e) {
                    checks.push_back({{"name", "count_fit"},
                                      {"pass", false},
                                      {"detail", std::string("fit unavailable: ") + e.what()}});
                }
            } else {
                jc["fit_skipped"] = "fewer than four ladder rungs";
            }
            results["count"] = std::move(jc);
        } else if (task == "compare") {
            if (!ps.family.has_value())
                throw ValidationError("preset '" + ps.name + "' has no integral point family");
            const AngularResult r = angular_compare(*ps.family, m.compare_T, m.bins);
            write_file(outdir / "compare.csv", csv_join(compare_rows(r)));
            results["compare"] = {{"ks_distance", r.ks_distance}, {"points", r.points}};
            checks.push_back({{"name", "compare_ks"},
                              {"pass", r.ks_distance < m.ks_threshold},
                              {"detail", "KS distance " + format_double(r.ks_distance) +
                                             " vs threshold " + format_double(m.ks_threshold)}});
        } else {
            throw ValidationError("unknown task '" + task + "'"); // manifest_from_json rejects
        }
    }

    bool all_pass = true;
    for (const json& c : checks) all_pass = all_pass && c.at("pass").get<bool>();
    summary["results"] = std::move(results);
    summary["checks"] = std::move(checks);
    summary["all_pass"] = all_pass;
    write_file(outdir / "summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    if (truncated)
        throw BudgetExceeded("enumeration candidate budget exhausted; partial report kept", 0.0,
                             gl.budget > 0 ? gl.budget : m.budget);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary-stratification exponents, volume asymptotics, and integer point "
                 "counts for affine symmetric varieties"};
    app.require_subcommand(1);
    GlobalOpts gl;
    add_globals(&app, gl);

    CLI::App* presets_cmd = app.add_subcommand("presets", "list the built-in presets");
    add_globals(presets_cmd, gl);

    std::string exp_preset;
    bool exp_polytope = false;
    CLI::App* exponents_cmd =
        app.add_subcommand("exponents", "global exponent triple (a, b, I) of a preset");
    exponents_cmd->add_option("--preset", exp_preset, "preset name, e.g. detsurface:3")
        ->required();
    exponents_cmd->add_flag("--polytope", exp_polytope,
                            "cross-check against the LP/polytope route (exit 4 on mismatch)");
    add_globals(exponents_cmd, gl);

    std::string strata_preset, strata_dot;
    CLI::App* strata_cmd =
        app.add_subcommand("strata", "lambda-connected strata, relative exponents, poset");
    strata_cmd->add_option("--preset", strata_preset, "preset name")->required();
    strata_cmd->add_option("--dot", strata_dot, "also write the closure poset as Graphviz DOT");
    add_globals(strata_cmd, gl);

    std::string vol_preset, vol_spec, vol_ladder, vol_bump;
    CLI::App* volume_cmd = app.add_subcommand(
        "volume", "renormalized chamber volumes along a T ladder vs the kappa*L target");
    volume_cmd->add_option("--preset", vol_preset, "preset name (single-term spec, chi = 2rho)");
    volume_cmd->add_option("--spec", vol_spec, "JSON file with an explicit exp-map spec");
    volume_cmd->add_option("--T-ladder", vol_ladder, "'1e2,1e3,1e4' or 'start:end:xFACTOR'")
        ->required();
    volume_cmd->add_option("--bump", vol_bump, "inline JSON test-function spec");
    add_globals(volume_cmd, gl);

    std::string count_preset, count_family, count_norm = "euclidean", count_ladder_text;
    std::vector<std::string> count_caps;
    CLI::App* count_cmd =
        app.add_subcommand("count", "integer points by norm ladder, total and per cap");
    count_cmd->add_option("--preset", count_preset, "preset name");
    count_cmd->add_option("--family", count_family, "family spec, e.g. quadric:2,2,1");
    count_cmd->add_option("--norm", count_norm, "euclidean (default) or sup");
    count_cmd->add_option("--ladder", count_ladder_text, "'50:800:x2' or comma list")->required();
    count_cmd->add_option("--cap", count_caps, "angular cap 'c1,c2,...@radius' (repeatable)");
    add_globals(count_cmd, gl);

    std::string cmp_preset, cmp_family, cmp_norm = "euclidean";
    double cmp_T = 100.0;
    int cmp_bins = 32;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "empirical vs predicted angular distribution (rank-one quadrics)");
    compare_cmd->add_option("--preset", cmp_preset, "preset name");
    compare_cmd->add_option("--family", cmp_family, "family spec");
    compare_cmd->add_option("--norm", cmp_norm, "euclidean (default) or sup");
    compare_cmd->add_option("--T", cmp_T, "norm threshold");
    compare_cmd->add_option("--bins", cmp_bins, "histogram bins")->check(CLI::PositiveNumber);
    add_globals(compare_cmd, gl);

    std::string report_manifest;
    CLI::App* report_cmd =
        app.add_subcommand("report", "run a JSON manifest of tasks and emit a summary");
    report_cmd->add_option("--manifest", report_manifest, "manifest JSON file")->required();
    add_globals(report_cmd, gl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (presets_cmd->parsed()) {
            run_presets();
        } else if (exponents_cmd->parsed()) {
            run_exponents(exp_preset, exp_polytope, gl);
        } else if (strata_cmd->parsed()) {
            run_strata(strata_preset, strata_dot, gl);
        } else if (volume_cmd->parsed()) {
            run_volume(vol_preset, vol_spec, vol_ladder, vol_bump, gl);
        } else if (count_cmd->parsed()) {
            run_count(count_preset, count_family, count_norm, count_ladder_text, count_caps, gl);
        } else if (compare_cmd->parsed()) {
            run_compare(cmp_preset, cmp_family, cmp_norm, cmp_T, cmp_bins, gl);
        } else if (report_cmd->parsed()) {
            return run_report(report_manifest, gl);
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (budget used: " << e.budget_used << ")\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

#include "satake/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>

#include "satake/errors.hpp"

namespace satake {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError("malformed JSON");
    return j;
}

// Wraps nlohmann's type errors into the library's validation error.
template <typename F>
auto checked(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("JSON schema violation: ") + e.what());
    }
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ValidationError("unknown JSON key '" + key + "'");
    }
}

json rat_array(const RatVec& v) {
    json arr = json::array();
    for (const Rational& c : v) arr.push_back(rational_to_string(c));
    return arr;
}

RatVec rat_array_from(const json& arr) {
    if (!arr.is_array()) throw ValidationError("expected an array of rationals");
    RatVec out;
    for (const auto& e : arr) out.push_back(rational_from_string(e.get<std::string>()));
    return out;
}

json bump_json(const BumpSpec& spec) {
    json j;
    j["kind"] = spec.kind;
    if (spec.kind == "radial") {
        j["r0"] = spec.r0;
        j["r1"] = spec.r1;
    } else if (spec.kind == "log_radial") {
        j["flat"] = spec.flat;
        j["cut"] = spec.cut;
        j["power"] = spec.power;
    } else {
        throw ValidationError("unknown bump kind '" + spec.kind + "'");
    }
    return j;
}

BumpSpec bump_from(const json& j) {
    return checked([&] {
        BumpSpec spec;
        spec.kind = j.at("kind").get<std::string>();
        if (spec.kind == "radial") {
            reject_unknown_keys(j, {"kind", "r0", "r1"});
            spec.r0 = j.at("r0").get<double>();
            spec.r1 = j.at("r1").get<double>();
        } else if (spec.kind == "log_radial") {
            reject_unknown_keys(j, {"kind", "flat", "cut", "power"});
            spec.flat = j.at("flat").get<double>();
            spec.cut = j.at("cut").get<double>();
            spec.power = j.at("power").get<double>();
        } else {
            throw ValidationError("unknown bump kind '" + spec.kind + "'");
        }
        return spec;
    });
}

} // namespace

TestFunction make_bump(const BumpSpec& spec) {
    if (spec.kind == "radial") return radial_bump(spec.r0, spec.r1);
    if (spec.kind == "log_radial") return log_radial_bump(spec.flat, spec.cut, spec.power);
    throw ValidationError("unknown bump kind '" + spec.kind + "'");
}

std::string bump_to_json(const BumpSpec& spec) { return bump_json(spec).dump(); }

BumpSpec bump_from_json(const std::string& text) { return bump_from(parse(text)); }

std::string exp_map_spec_to_json(const ExpMapSpec& spec) {
    json j;
    j["rank"] = spec.rank;
    j["lead"] = spec.lead;
    j["chi"] = rat_array(spec.chi.coords);
    json terms = json::array();
    for (const ExpTerm& t : spec.terms) {
        json jt;
        jt["lam"] = rat_array(t.lam.coords);
        jt["w"] = t.w;
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

ExpMapSpec exp_map_spec_from_json(const std::string& text) {
    const json j = parse(text);
    return checked([&] {
        reject_unknown_keys(j, {"rank", "lead", "chi", "terms"});
        ExpMapSpec spec;
        spec.rank = j.at("rank").get<int>();
        spec.lead = j.value("lead", 0);
        spec.chi = Weight{rat_array_from(j.at("chi"))};
        for (const auto& jt : j.at("terms")) {
            reject_unknown_keys(jt, {"lam", "w"});
            ExpTerm term;
            term.lam = Weight{rat_array_from(jt.at("lam"))};
            term.w = jt.at("w").get<std::vector<double>>();
            spec.terms.push_back(std::move(term));
        }
        validate_spec(spec);
        return spec;
    });
}

std::string exponent_triple_to_json(const RootSystemDesc& rs, const ExponentTriple& t) {
    json j;
    j["a"] = rational_to_string(t.a);
    j["b"] = t.b;
    json names = json::array();
    for (int i : t.I.members()) names.push_back(rs.root_name(i));
    j["I"] = std::move(names);
    return j.dump();
}

std::string manifest_to_json(const RunManifest& m) {
    json j;
    j["preset"] = m.preset;
    j["tasks"] = m.tasks;
    j["ladder"] = m.ladder;
    j["output_dir"] = m.output_dir;
    j["seed"] = m.seed;
    j["norm"] = m.norm;
    j["compare_T"] = m.compare_T;
    j["bins"] = m.bins;
    json caps = json::array();
    for (const CapSpec& c : m.caps) {
        json jc;
        jc["center"] = c.center;
        jc["radius"] = c.radius;
        caps.push_back(std::move(jc));
    }
    j["caps"] = std::move(caps);
    j["bump"] = bump_json(m.bump);
    j["fit_tolerance"] = m.fit_tolerance;
    j["ks_threshold"] = m.ks_threshold;
    j["volume_tolerance"] = m.volume_tolerance;
    j["budget"] = m.budget;
    return j.dump(2);
}

RunManifest manifest_from_json(const std::string& text) {
    const json j = parse(text);
    return checked([&] {
        reject_unknown_keys(j, {"preset", "tasks", "ladder", "output_dir", "seed", "norm",
                                "compare_T", "bins", "caps", "bump", "fit_tolerance",
                                "ks_threshold", "volume_tolerance", "budget"});
        RunManifest m;
        m.preset = j.at("preset").get<std::string>();
        m.tasks = j.value("tasks", std::vector<std::string>{});
        m.ladder = j.value("ladder", std::vector<double>{});
        m.output_dir = j.value("output_dir", std::string("."));
        m.seed = j.value("seed", 0LL);
        m.norm = j.value("norm", std::string("euclidean"));
        if (m.norm != "euclidean" && m.norm != "sup")
            throw ValidationError("norm must be 'euclidean' or 'sup'");
        m.compare_T = j.value("compare_T", 100.0);
        m.bins = j.value("bins", 32);
        if (j.contains("caps"))
            for (const auto& jc : j.at("caps")) {
                reject_unknown_keys(jc, {"center", "radius"});
                CapSpec c;
                c.center = jc.at("center").get<std::vector<double>>();
                c.radius = jc.at("radius").get<double>();
                m.caps.push_back(std::move(c));
            }
        if (j.contains("bump")) m.bump = bump_from(j.at("bump"));
        m.fit_tolerance = j.value("fit_tolerance", 0.25);
        m.ks_threshold = j.value("ks_threshold", 0.1);
        m.volume_tolerance = j.value("volume_tolerance", 0.1);
        m.budget = j.value("budget", -1LL);
        const std::vector<std::string> known_tasks{"exponents", "strata", "volume", "count",
                                                   "compare"};
        for (const std::string& t : m.tasks)
            if (std::find(known_tasks.begin(), known_tasks.end(), t) == known_tasks.end())
                throw ValidationError("unknown task '" + t + "'");
        return m;
    });
}

std::string csv_join(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            const std::string& f = row[i];
            if (f.find_first_of(",\"\r\n") != std::string::npos) {
                out += '"';
                for (char c : f) {
                    if (c == '"') out += '"';
                    out += c;
                }
                out += '"';
            } else {
                out += f;
            }
        }
        out += "\r\n";
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace satake

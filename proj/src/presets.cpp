#include "satake/presets.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "satake/errors.hpp"

namespace satake {

namespace {

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

[[noreturn]] void bad_preset(const std::string& text) {
    std::ostringstream msg;
    msg << "unknown or malformed preset '" << text << "'; valid presets:";
    for (const std::string& u : preset_usage()) msg << "\n  " << u;
    throw ValidationError(msg.str());
}

long long parse_int(const std::string& text, const std::string& field) {
    long long v = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end) bad_preset(text);
    return v;
}

Weight two_omega1(const RootSystemDesc& rs) {
    RatVec n(rs.rank, Rational(0));
    n[0] = 2;
    return weight_from_fundamental(rs, n);
}

} // namespace

Preset lookup_preset(const std::string& text, NormKind norm) {
    const auto head = split(text, ':');
    if (head.size() != 2) bad_preset(text);
    const std::string& kind = head[0];
    const auto args = split(head[1], ',');

    Preset out;
    if (kind == "quadric") {
        if (args.size() != 2 && args.size() != 3) bad_preset(text);
        const int p = static_cast<int>(parse_int(text, args[0]));
        const int q = static_cast<int>(parse_int(text, args[1]));
        const long long k = args.size() == 3 ? parse_int(text, args[2]) : 1;
        out.family = make_quadric(p, q, k, norm);
        out.rs = build_root_system(Family::A, 1, MultiplicityProfile::uniform(q - 1, p - 1));
        out.lam = two_omega1(out.rs);
        out.name = "quadric:" + std::to_string(p) + "," + std::to_string(q) + "," +
                   std::to_string(k);
        return out;
    }
    if (kind == "detsurface") {
        if (args.size() != 1 && args.size() != 2) bad_preset(text);
        const int n = static_cast<int>(parse_int(text, args[0]));
        const long long k = args.size() == 2 ? parse_int(text, args[1]) : 1;
        out.family = make_detsurface(n, k, norm);
        out.rs = build_root_system(Family::A, n - 1, MultiplicityProfile::uniform(1, 1));
        out.lam = two_omega1(out.rs);
        out.name = "detsurface:" + std::to_string(n) + "," + std::to_string(k);
        return out;
    }
    if (kind == "symmat") {
        if (args.size() != 2) bad_preset(text);
        const int p = static_cast<int>(parse_int(text, args[0]));
        const int q = static_cast<int>(parse_int(text, args[1]));
        out.family = make_symmat(p, q, norm);
        out.rs = build_root_system(Family::A, p + q - 1, MultiplicityProfile::uniform(1, 0));
        out.lam = two_omega1(out.rs);
        out.name = "symmat:" + std::to_string(p) + "," + std::to_string(q);
        return out;
    }
    if (kind == "tworho") {
        if (args.size() != 2 && args.size() != 3) bad_preset(text);
        if (args[0].size() != 1) bad_preset(text);
        Family family;
        switch (args[0][0]) {
        case 'A': family = Family::A; break;
        case 'B': family = Family::B; break;
        case 'C': family = Family::C; break;
        case 'D': family = Family::D; break;
        default: bad_preset(text);
        }
        const int rank = static_cast<int>(parse_int(text, args[1]));
        const long long ell = args.size() == 3 ? parse_int(text, args[2]) : 1;
        if (ell < 1) bad_preset(text);
        out.rs = build_root_system(family, rank, MultiplicityProfile::uniform(1, 1));
        Weight lam = two_rho(out.rs);
        for (Rational& c : lam.coords) {
            const Rational scaled = c * ell;
            c = scaled;
        }
        out.lam = lam;
        out.name = "tworho:" + args[0] + "," + std::to_string(rank) + "," + std::to_string(ell);
        return out;
    }
    bad_preset(text);
}

PointFamily parse_family(const std::string& text, NormKind norm) {
    const auto head = split(text, ':');
    if (head.size() != 2) bad_preset(text);
    const std::string& kind = head[0];
    const auto args = split(head[1], ',');

    if (kind == "quadric") {
        if (args.size() != 2 && args.size() != 3) bad_preset(text);
        const int p = static_cast<int>(parse_int(text, args[0]));
        const int q = static_cast<int>(parse_int(text, args[1]));
        const long long k = args.size() == 3 ? parse_int(text, args[2]) : 1;
        return make_quadric(p, q, k, norm);
    }
    if (kind == "detsurface") {
        if (args.size() != 1 && args.size() != 2) bad_preset(text);
        const int n = static_cast<int>(parse_int(text, args[0]));
        const long long k = args.size() == 2 ? parse_int(text, args[1]) : 1;
        return make_detsurface(n, k, norm);
    }
    if (kind == "symmat") {
        if (args.size() != 2) bad_preset(text);
        const int p = static_cast<int>(parse_int(text, args[0]));
        const int q = static_cast<int>(parse_int(text, args[1]));
        return make_symmat(p, q, norm);
    }
    bad_preset(text);
}

std::vector<std::string> preset_usage() {
    return {
        "quadric:p,q[,k]       signature (p,q) quadric Q(x) = k (default k = 1)",
        "detsurface:n[,k]      n x n integer matrices with det = k (default k = 1)",
        "symmat:p,q            symmetric matrices of signature (p,q), det = (-1)^q",
        "tworho:family,rank[,ell]  group weight lam = 2*ell*rho (A/B/C/D; no point family)",
    };
}

} // namespace satake

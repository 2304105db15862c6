#include "satake/rational.hpp"

#include <cctype>

namespace satake {

Rational rational_from_string(std::string_view s) {
    auto fail = [&] { throw ValidationError("malformed rational: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    auto is_int = [&](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) fail();
        return Rational(Integer(std::string(s)));
    }
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) fail();
    const Integer d{std::string(den)};
    if (d == 0) throw ValidationError("zero denominator in rational: '" + std::string(s) + "'");
    return Rational(Integer(std::string(num)), d);
}

std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace satake

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "satake/errors.hpp"

namespace satake {

// Exact rational arithmetic.  GMP keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form the library's serialized
// "p/q" strings assume.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "p/q" or plain "p" (optional sign, arbitrary precision).
Rational rational_from_string(std::string_view s);

// Canonical serialization: always "p/q", q > 0, lowest terms ("6" -> "6/1").
std::string rational_to_string(const Rational& q);

} // namespace satake

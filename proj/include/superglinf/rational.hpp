#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superglinf {

// Exact rational scalar. Always kept in reduced form with positive
// denominator; every helper below preserves that invariant.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "n" or "n/d" with optional sign.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string rational_str(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace superglinf

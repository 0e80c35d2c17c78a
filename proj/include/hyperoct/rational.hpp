#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperoct {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "num/den" form; the denominator is always printed.
std::string to_string(const Rational& r);

/// Accepts "a/b", "a" and "-a/b". Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);

/// num/den in canonical form.
Rational frac(long num, long den);

/// Integer power with 0^0 = 1.
Rational pow(const Rational& base, unsigned e);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace hyperoct

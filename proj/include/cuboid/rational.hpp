#pragma once

// Exact rational scalars. GMP keeps every mpq_class result in lowest terms
// with a positive denominator, which is the canonical form used everywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuboid {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p/q" or an integer "p". Whitespace and a zero denominator are
/// rejected. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with an explicit "/1".
std::string to_string(const Rational& r);

/// True when gcd(|num|, den) = 1 and den > 0.
bool is_canonical(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace cuboid

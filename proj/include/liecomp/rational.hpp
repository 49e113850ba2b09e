#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liecomp {

// Arbitrary precision rationals. gmpxx keeps every arithmetic result in
// canonical form (positive denominator, gcd 1); values built from raw
// numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace liecomp

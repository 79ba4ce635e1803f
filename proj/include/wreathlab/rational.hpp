#pragma once

#include <gmpxx.h>

#include <string>

namespace wreathlab {

using Integer  = mpz_class;
using Rational = mpq_class;

// mpq_class's two-argument constructor does not reduce; this does.
inline Rational frac(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Rational frac(long num, long den) { return frac(Integer(num), Integer(den)); }

// Canonical fraction rendering, always with an explicit denominator:
// "-3/7", "0/1", "5/1".
std::string to_fraction_string(const Rational& q);

// Accepts "a/b", plain integers, and decimal literals ("1.25", "-0.5").
Rational parse_rational(const std::string& text);

enum class Rounding { Down, Up, Nearest };

// Fixed-point decimal rendering with `digits` fractional digits.
// Rounding::Down rounds toward -inf, Rounding::Up toward +inf.
std::string to_decimal_string(const Rational& q, int digits,
                              Rounding mode = Rounding::Nearest);

Rational rational_pow(const Rational& base, unsigned long exp);

// Parses a positive integer magnitude: "1e100", "10^100" or plain digits.
Integer parse_magnitude(const std::string& text);

// 10^k as an Integer (k >= 0).
Integer pow10(unsigned long k);

} // namespace wreathlab

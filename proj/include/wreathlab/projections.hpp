#pragma once

#include "wreathlab/groupring.hpp"

namespace wreathlab {

// q = m/n with n = 2^r s, s odd and 2^r >= s - 1; the minimal such n is
// reached by doubling the reduced denominator.
struct AdmissibleFraction {
    Integer m;
    Integer n;
    int r = 0;
    Integer s;
};

// Requires 0 <= q <= 1.
AdmissibleFraction admissible_fraction(const Rational& q);

// Projection e(c) in Q[C_{2^r}] with trace c / 2^r, built by the corner
// recursion through (1 + t^(2^(r-1)))/2. Requires 0 <= c <= 2^r.
FagRingQ dyadic_projection(const Integer& c, int r);

// Witness data for a projection in Q[C_n] with prescribed trace q = m/n:
// e = e(a) f + e(b)(1 - f) with f = avg(C_s) and a + (s-1) b = m.
struct TraceProjectionCertificate {
    Rational q;
    Integer m, n, s;
    int r = 0;
    Integer a, b;
    FagRingQ e;  // over C_n
};

// Requires 0 <= q <= 1. The s = 1 branch takes f = 1, a = m, b = 0.
TraceProjectionCertificate projection_with_trace(const Rational& q);

// True iff every coefficient of n*e is an integer.
bool has_integral_multiple(const FagRingQ& e, const Integer& n);

} // namespace wreathlab

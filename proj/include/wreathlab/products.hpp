#pragma once

#include <optional>
#include <string>

#include "wreathlab/ball.hpp"
#include "wreathlab/contfrac.hpp"
#include "wreathlab/groupring.hpp"
#include "wreathlab/projections.hpp"

namespace wreathlab {

struct KappaParams {
    Rational p;  // in (0, 1); X = 1/p
    Rational q;  // in (0, 1); Y = 1/q
    int digits = 30;
};

struct KappaReport {
    Rational p, q;
    int digits = 0;
    Ball value;       // contains the exact kappa(p, q)
    long terms_used;  // largest series index k included
    Ball tail_bound;  // certified enclosure of the discarded tail, >= 0
    ContinuedFractionReport cf;
    Integer min_denominator_witness;  // largest certified convergent denominator
};

// kappa(p,q) = (X-1)^2 (Y-1)^2 sum_{k>=2} phi(k) / ((X^k - 1)(Y^k - 1))
// with X = 1/p, Y = 1/q. Terms are exact rationals summed in ball
// arithmetic at digits+20 guard digits; the tail over k > K is bounded by
// k (XY)^-k majorization summed in closed form.
KappaReport kappa_evaluate(const KappaParams& params);

// Fixed-truncation variant: sums k <= K and reports the certified tail.
KappaReport kappa_partial(const KappaParams& params, long K);

struct DimKerResult {
    Rational partial;  // sum over the truncation box, exact
    Ball tail;         // certified enclosure of the remainder
};

// Double-sum route to dim ker(T - S):
//   sum_{n,n'} (gcd(n,n') - 1)(X-1)^2 (Y-1)^2 / (X^n Y^n').
DimKerResult dim_ker_difference(const Rational& X, const Rational& Y, int trunc_n);

// Coefficient-level identity behind the single-sum rewrite: the coefficient
// of X^-m Y^-n in sum_{k<=K} phi(k) (sum_i X^-ik)(sum_j Y^-jk) equals
// gcd(m,n) for all m, n <= K.
bool check_gcd_coefficient_identity(int K);

struct RationalityVerdict {
    bool exact_rational = false;
    std::optional<Rational> exact_value;
    size_t certified_terms = 0;
    Integer largest_denominator;
    bool denominator_exceeds_bound = false;
    std::string statement;
};

// Sound statements only: either the value is an exhibited rational, or any
// rational in the certified interval has denominator above `bound`.
// Never claims irrationality. Requires the report certified to at least
// 2*log10(bound) digits.
RationalityVerdict probe_rationality(const KappaReport& report, const Integer& bound);

struct IntegralityReport {
    Integer scale;            // m*n from the two certificates
    bool all_integer = false; // every coefficient of scale*(T - S) integral
    bool eigen_ok = false;    // (T-S)(p q') = (lambda - lambda')(p q') exactly
    size_t support = 0;
};

// Builds Z = mn(T - S) from trace-p and trace-q projections over C_m, C_n
// and verifies integrality plus the eigenvalue relation on the product
// eigenprojections with indices up to n_max.
IntegralityReport check_integral_difference(const Rational& p, const Rational& q, int n_max);

} // namespace wreathlab

#pragma once

#include <vector>

#include "wreathlab/rational.hpp"

namespace wreathlab {

// Certified continued fraction prefix of a rational interval [lo, hi].
// Every real in the interval has a continued fraction expansion beginning
// with `terms`; when `exact` is set the interval was a single rational whose
// expansion terminated, and the last convergent equals that rational.
struct ContinuedFractionReport {
    std::vector<Integer> terms;          // certified partial quotients (first may be <= 0)
    std::vector<Rational> convergents;   // k-th convergent per certified term
    bool exact = false;
    Rational exact_value;                // valid only when exact

    size_t certified() const { return terms.size(); }
};

// Runs the Euclidean continued fraction algorithm on both endpoints and emits
// the common prefix; stops at the first disagreement, at exhaustion of a
// rational endpoint, or after max_terms.
ContinuedFractionReport cf_expand(const Rational& lo, const Rational& hi, int max_terms);

} // namespace wreathlab

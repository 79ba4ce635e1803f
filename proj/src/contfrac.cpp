#include "wreathlab/contfrac.hpp"

#include "wreathlab/errors.hpp"

namespace wreathlab {

ContinuedFractionReport cf_expand(const Rational& lo, const Rational& hi, int max_terms) {
    if (lo > hi) throw invalid_input("cf_expand: empty interval");
    ContinuedFractionReport report;
    Rational a = lo, b = hi;
    Integer h_prev(1), h_prev2(0);  // convergent numerators h_{k-1}, h_{k-2}
    Integer k_prev(0), k_prev2(1);  // convergent denominators
    for (int step = 0; step < max_terms; ++step) {
        Integer fa, fb;
        mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
        mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        if (fa != fb) break;
        report.terms.push_back(fa);
        Integer h = fa * h_prev + h_prev2;
        Integer k = fa * k_prev + k_prev2;
        Rational conv(h, k);
        conv.canonicalize();
        report.convergents.push_back(conv);
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;

        Rational ra = a - Rational(fa);
        Rational rb = b - Rational(fb);
        if (ra == 0 && rb == 0) {
            report.exact = true;
            report.exact_value = conv;
            break;
        }
        if (ra == 0 || rb == 0) break;  // one endpoint terminated: no further agreement
        a = 1 / rb;  // the remainder map reverses orientation
        b = 1 / ra;
    }
    return report;
}

} // namespace wreathlab

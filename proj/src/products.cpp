#include "wreathlab/products.hpp"

#include <numeric>

#include "wreathlab/numtheory.hpp"
#include "wreathlab/spectral.hpp"

namespace wreathlab {

namespace {

void validate(const KappaParams& params) {
    if (params.p <= 0 || params.p >= 1 || params.q <= 0 || params.q >= 1)
        throw invalid_input("kappa parameters must lie in (0, 1)");
    if (params.digits < 1) throw invalid_input("digit request must be positive");
    if (params.digits > 10000) throw budget_exceeded("digit request beyond supported budget");
}

long bits_for_digits(int digits) {
    return static_cast<long>((digits + 4) * 3.3219280948873623) + 16;
}

// sum_{k > K} k z^k = z^(K+1) ((K+1) - K z) / (1 - z)^2 for 0 < z < 1.
Rational linear_geometric_tail(const Rational& z, long K) {
    Rational zk = rational_pow(z, static_cast<unsigned long>(K) + 1);
    return zk * ((K + 1) - K * z) / ((1 - z) * (1 - z));
}

// Certified tail of the phi series past K: phi(k) <= k and
// (X^k - 1) >= X^k (1 - 1/X) give a linear-geometric majorant.
Rational phi_series_tail_bound(const Rational& X, const Rational& Y, long K) {
    Rational z = 1 / (X * Y);
    Rational c = 1 / ((1 - 1 / X) * (1 - 1 / Y));
    return c * linear_geometric_tail(z, K);
}

KappaReport evaluate_with_truncation(const KappaParams& params, long K, long prec) {
    const Rational X = 1 / params.p;
    const Rational Y = 1 / params.q;
    const Rational prefactor = (X - 1) * (X - 1) * (Y - 1) * (Y - 1);

    Ball sum = Ball::exact_zero(prec);
    std::vector<long> phi(static_cast<size_t>(K) + 1, 0);
    for (long k = 1; k <= K; ++k) phi[static_cast<size_t>(k)] = k;
    for (long k = 2; k <= K; ++k)
        if (phi[static_cast<size_t>(k)] == k)  // k prime in this Euler sieve
            for (long j = k; j <= K; j += k)
                phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / k;

    Rational xpow = X, ypow = Y;
    for (long k = 2; k <= K; ++k) {
        xpow *= X;
        ypow *= Y;
        Rational term = prefactor * phi[static_cast<size_t>(k)] / ((xpow - 1) * (ypow - 1));
        sum = sum + Ball::from_rational(term, prec);
    }

    Rational tail = prefactor * phi_series_tail_bound(X, Y, K);
    KappaReport report;
    report.p = params.p;
    report.q = params.q;
    report.digits = params.digits;
    report.terms_used = K;
    report.tail_bound = Ball::from_endpoints(Rational(0), tail, prec);
    report.value = sum + report.tail_bound;
    report.cf = cf_expand(report.value.lower(), report.value.upper(), 100000);
    report.min_denominator_witness =
        report.cf.convergents.empty() ? Integer(0) : report.cf.convergents.back().get_den();
    return report;
}

} // namespace

KappaReport kappa_partial(const KappaParams& params, long K) {
    validate(params);
    if (K < 2) throw invalid_input("truncation must include k = 2");
    return evaluate_with_truncation(params, K, bits_for_digits(params.digits + 20));
}

KappaReport kappa_evaluate(const KappaParams& params) {
    validate(params);
    const Rational X = 1 / params.p;
    const Rational Y = 1 / params.q;
    const Rational prefactor = (X - 1) * (X - 1) * (Y - 1) * (Y - 1);
    // Grow K until the certified tail clears the digit request with margin.
    Rational target = Rational(1, pow10(static_cast<unsigned long>(params.digits) + 2));
    long K = 16;
    while (prefactor * phi_series_tail_bound(X, Y, K) > target) {
        K *= 2;
        if (K > (1L << 26)) throw budget_exceeded("series truncation grew beyond budget");
    }
    return evaluate_with_truncation(params, K, bits_for_digits(params.digits + 20));
}

DimKerResult dim_ker_difference(const Rational& X, const Rational& Y, int trunc_n) {
    if (X <= 1 || Y <= 1) throw invalid_input("X and Y must exceed 1");
    if (trunc_n < 1) throw invalid_input("truncation must be at least 1");
    const Rational prefactor = (X - 1) * (X - 1) * (Y - 1) * (Y - 1);
    Rational partial(0);
    std::vector<Rational> xpow(static_cast<size_t>(trunc_n) + 1), ypow(xpow.size());
    xpow[0] = ypow[0] = 1;
    for (int k = 1; k <= trunc_n; ++k) {
        xpow[static_cast<size_t>(k)] = xpow[static_cast<size_t>(k) - 1] * X;
        ypow[static_cast<size_t>(k)] = ypow[static_cast<size_t>(k) - 1] * Y;
    }
    for (int n = 1; n <= trunc_n; ++n) {
        for (int np = 1; np <= trunc_n; ++np) {
            long g = std::gcd(n, np);
            if (g <= 1) continue;
            partial += Rational(g - 1) * prefactor /
                       (xpow[static_cast<size_t>(n)] * ypow[static_cast<size_t>(np)]);
        }
    }
    // Remainder over n > N or n' > N, using gcd - 1 <= min(n, n').
    int N = trunc_n;
    Rational xN = rational_pow(X, static_cast<unsigned long>(N));
    Rational yN = rational_pow(Y, static_cast<unsigned long>(N));
    Rational bound = (X - 1) * Y / xN + X * (Y - 1) / yN;
    DimKerResult out;
    out.partial = partial;
    out.tail = Ball::from_endpoints(Rational(0), bound, 128);
    return out;
}

bool check_gcd_coefficient_identity(int K) {
    if (K < 1) throw invalid_input("K must be positive");
    // Accumulate sum_{k | g} phi(k) per coefficient cell (m, n).
    std::vector<std::vector<long>> acc(static_cast<size_t>(K) + 1,
                                       std::vector<long>(static_cast<size_t>(K) + 1, 0));
    for (int k = 1; k <= K; ++k) {
        long phik = euler_phi(Integer(k)).get_si();
        for (int i = k; i <= K; i += k)
            for (int j = k; j <= K; j += k)
                acc[static_cast<size_t>(i)][static_cast<size_t>(j)] += phik;
    }
    for (int m = 1; m <= K; ++m)
        for (int n = 1; n <= K; ++n)
            if (acc[static_cast<size_t>(m)][static_cast<size_t>(n)] != std::gcd(m, n))
                return false;
    return true;
}

RationalityVerdict probe_rationality(const KappaReport& report, const Integer& bound) {
    // Certified width must be below bound^-2.
    Rational width = report.value.upper() - report.value.lower();
    if (width * bound * bound > 1)
        throw needs_more_digits("report not certified finely enough for this bound");
    RationalityVerdict out;
    out.certified_terms = report.cf.certified();
    out.largest_denominator =
        report.cf.convergents.empty() ? Integer(0) : report.cf.convergents.back().get_den();
    if (report.cf.exact) {
        out.exact_rational = true;
        out.exact_value = report.cf.exact_value;
        out.statement = "value is the rational " + to_fraction_string(*out.exact_value);
        return out;
    }
    if (out.largest_denominator > bound) {
        out.denominator_exceeds_bound = true;
        out.statement = "if the value is rational, its denominator exceeds the bound";
    } else {
        out.statement = "no statement at this precision";
    }
    return out;
}

IntegralityReport check_integral_difference(const Rational& p, const Rational& q, int n_max) {
    auto cert_e = projection_with_trace(p);
    auto cert_f = projection_with_trace(q);
    SpectralSetup left = make_setup(cert_e.e.group(), cert_e.e);
    SpectralSetup right = make_setup(cert_f.e.group(), cert_f.e);
    auto G = std::make_shared<const ProductGroup>(*left.wreath, *right.wreath);

    ProductRingQ T = embed_left(G, left.T);
    ProductRingQ S = embed_right(G, right.T);
    ProductRingQ difference = T - S;
    Integer scale = cert_e.n * cert_f.n;

    IntegralityReport out;
    out.scale = scale;
    out.all_integer = true;
    ProductRingQ Z = difference.scaled(Rational(scale));
    out.support = Z.support_size();
    for (const auto& [elem, coeff] : Z.terms()) {
        Rational c(coeff);
        c.canonicalize();
        if (c.get_den() != 1) {
            out.all_integer = false;
            break;
        }
    }

    out.eigen_ok = true;
    for (int b = 2; b <= n_max && out.eigen_ok; ++b) {
        for (int bp = 2; bp <= n_max && out.eigen_ok; ++bp) {
            long N = std::lcm(4L * b, 4L * bp);
            ProductRingC diff_c = embed_coefficients(promote(difference), N);
            for (int a = 1; a < b && out.eigen_ok; ++a) {
                WreathRingC pa = eigenspace_projection(left, a, b);
                CyclotomicNumber la = two_cos_exact(a, b).embed_into(N);
                for (int ap = 1; ap < bp && out.eigen_ok; ++ap) {
                    WreathRingC qb = eigenspace_projection(right, ap, bp);
                    CyclotomicNumber lb = two_cos_exact(ap, bp).embed_into(N);
                    ProductRingC pq = product_embed(G, embed_coefficients(pa, N),
                                                    embed_coefficients(qb, N));
                    ProductRingC lhs = diff_c * pq;
                    ProductRingC rhs = pq.scaled(la - lb);
                    if (!(lhs == rhs)) out.eigen_ok = false;
                }
            }
        }
    }
    return out;
}

} // namespace wreathlab

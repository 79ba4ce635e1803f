#include "wreathlab/series.hpp"

#include <numeric>

#include "wreathlab/errors.hpp"

namespace wreathlab {

BivariateSeries::BivariateSeries(int order) : order_(order) {
    if (order < 1) throw invalid_input("series order must be positive");
    coeff_.assign(static_cast<size_t>(order) * static_cast<size_t>(order), Rational(0));
}

size_t BivariateSeries::index(int i, int j) const {
    if (i < 1 || i > order_ || j < 1 || j > order_)
        throw invalid_input("series coefficient index out of range");
    return static_cast<size_t>(i - 1) * static_cast<size_t>(order_) + static_cast<size_t>(j - 1);
}

const Rational& BivariateSeries::at(int i, int j) const { return coeff_[index(i, j)]; }

void BivariateSeries::set(int i, int j, Rational value) { coeff_[index(i, j)] = std::move(value); }

BivariateSeries gcd_series(int K) {
    if (K < 1 || K > 500) throw budget_exceeded("series order outside the supported range 1..500");
    BivariateSeries out(K);
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j)
            out.set(i, j, Rational(std::gcd(i, j)));
    return out;
}

bool check_diagonal_identity(int K) {
    if (K < 2) throw invalid_input("K must be at least 2");
    for (long n = 1; n <= K; ++n) {
        Integer diag(0);
        for (long i = 1; i <= n - 1; ++i) diag += std::gcd(i, n - i);
        if (gcd_sum(Integer(n)) - diag != n) return false;
    }
    return true;
}

namespace {

Integer gcd_sum_of(const Factorization& f) {
    Integer out(1);
    for (const auto& pf : f.factors) {
        Integer pe, pe1;
        mpz_pow_ui(pe.get_mpz_t(), pf.prime.get_mpz_t(), pf.exponent);
        mpz_pow_ui(pe1.get_mpz_t(), pf.prime.get_mpz_t(), pf.exponent - 1);
        out *= pe + pf.exponent * pe1 * (pf.prime - 1);
    }
    return out;
}

} // namespace

DominanceCheck dominance_check(const Integer& m, int N, const FactorOptions& opt) {
    if (N < 1) throw invalid_input("window size N must be positive");
    if (m <= N) throw invalid_input("m must exceed N");
    DominanceCheck out;
    out.m = m;
    out.N = N;
    out.a_m = gcd_sum(m, opt);
    out.all_dominated = true;
    out.max_ratio = Rational(0);
    for (long j = -N; j <= N; ++j) {
        if (j == 0) continue;
        DominanceEntry entry;
        entry.offset = j;
        entry.factorization = factorize(m + j, opt);
        entry.a_value = gcd_sum_of(entry.factorization);
        entry.ratio = Rational(entry.a_value) / Rational(out.a_m);
        entry.ratio.canonicalize();
        entry.dominated = out.a_m > N * entry.a_value;
        if (!entry.dominated) out.all_dominated = false;
        if (entry.ratio > out.max_ratio) out.max_ratio = entry.ratio;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

DominanceWitness dominance_witness(long Q, int N, const FactorOptions& opt) {
    if (Q < 1 || N < 1) throw invalid_input("witness parameters must be positive");
    DominanceWitness out;
    out.Q = Q;
    out.N = N;
    out.m_Q = 1;
    auto primes = primes_first(std::max(Q, static_cast<long>(N)));
    for (long i = 0; i < Q; ++i) out.m_Q *= primes[static_cast<size_t>(i)];
    for (int i = 0; i < N; ++i) {
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(primes[static_cast<size_t>(i)]),
                      static_cast<unsigned long>(N));
        out.m_Q *= pk;
    }
    out.check = dominance_check(out.m_Q, N, opt);
    Integer pQ(primes[static_cast<size_t>(Q) - 1]);
    for (const auto& entry : out.check.entries) {
        int tail = 0, total = 0;
        for (const auto& pf : entry.factorization.factors) {
            total += static_cast<int>(pf.exponent);
            if (pf.prime >= pQ) tail += static_cast<int>(pf.exponent);
        }
        out.tail_factor_counts.push_back(tail);
        out.omega.push_back(total);
    }
    return out;
}

} // namespace wreathlab

#include "wreathlab/numtheory.hpp"

#include <algorithm>
#include <mutex>

#include "wreathlab/ball.hpp"
#include "wreathlab/errors.hpp"

namespace wreathlab {

Integer Factorization::value() const {
    Integer out(1);
    for (const auto& f : factors) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        out *= p;
    }
    return out;
}

namespace {

std::vector<long>& prime_cache() {
    static std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    return primes;
}

std::mutex& prime_mutex() {
    static std::mutex m;
    return m;
}

void extend_primes_locked(long count) {
    auto& primes = prime_cache();
    long candidate = primes.back();
    while (static_cast<long>(primes.size()) < count) {
        candidate += 2;
        bool composite = false;
        for (long p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) { composite = true; break; }
        }
        if (!composite) primes.push_back(candidate);
    }
}

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// f(x) = x^2 + c mod n cycle finding (Brent), charging iterations to `spent`.
Integer brent_split(const Integer& n, unsigned long c0, unsigned long long budget,
                    unsigned long long& spent) {
    for (unsigned long c = c0;; ++c) {
        Integer y(2), x, q(1), g(1), ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Integer diff = x - y;
                    q = q * abs(diff) % n;
                }
                spent += lim;
                if (spent > budget) throw budget_exceeded("factorization budget exceeded");
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time to recover the factor.
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                if (++spent > budget) throw budget_exceeded("factorization budget exceeded");
            } while (g == 1);
        }
        if (g != n) return g;
        // Degenerate cycle for this c; restart with the next increment.
    }
}

void factor_recursive(const Integer& n, std::vector<Integer>& primes_out,
                      unsigned long seed, unsigned long long budget,
                      unsigned long long& spent) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                std::vector<Integer> base;
                factor_recursive(root, base, seed, budget, spent);
                for (unsigned long i = 0; i < e; ++i)
                    primes_out.insert(primes_out.end(), base.begin(), base.end());
                return;
            }
        }
    }
    Integer d = brent_split(n, seed, budget, spent);
    factor_recursive(d, primes_out, seed + 1, budget, spent);
    factor_recursive(n / d, primes_out, seed + 1, budget, spent);
}

} // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long p : small)
        if (miller_rabin_witness(n, Integer(p), d, s)) return false;
    return true;
}

Factorization factorize(const Integer& n, const FactorOptions& opt) {
    if (n < 1) throw invalid_input("factorize requires n >= 1");
    Factorization out;
    if (n == 1) return out;
    Integer rest = n;
    std::vector<Integer> primes;
    const auto trial = primes_first(1229);  // primes through 10^4
    for (size_t i = 0; i < 1229 && i < trial.size(); ++i) {
        long p = trial[i];
        if (Integer(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    unsigned long long spent = 0;
    factor_recursive(rest, primes, opt.seed, opt.budget, spent);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return out;
}

Integer euler_phi(const Integer& n, const FactorOptions& opt) {
    if (n < 1) throw invalid_input("euler_phi requires n >= 1");
    Integer out(1);
    for (const auto& f : factorize(n, opt).factors) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), f.prime.get_mpz_t(), f.exponent - 1);
        out *= pk * (f.prime - 1);
    }
    return out;
}

std::vector<Integer> divisors(const Factorization& f) {
    std::vector<Integer> out = {Integer(1)};
    for (const auto& pf : f.factors) {
        size_t old = out.size();
        Integer pk(1);
        for (unsigned e = 1; e <= pf.exponent; ++e) {
            pk *= pf.prime;
            for (size_t i = 0; i < old; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool phi_divisor_sum_matches_gcd(const Integer& m, const Integer& n) {
    if (m < 1 || n < 1) throw invalid_input("arguments must be positive");
    Integer g = gcd(m, n);
    Integer sum(0);
    for (const Integer& d : divisors(factorize(g))) sum += euler_phi(d);
    return sum == g;
}

Integer gcd_sum(const Integer& n, const FactorOptions& opt) {
    if (n < 1) throw invalid_input("gcd_sum requires n >= 1");
    Integer out(1);
    for (const auto& f : factorize(n, opt).factors) {
        Integer pe, pe1;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        mpz_pow_ui(pe1.get_mpz_t(), f.prime.get_mpz_t(), f.exponent - 1);
        out *= pe + f.exponent * pe1 * (f.prime - 1);
    }
    return out;
}

std::vector<long> primes_first(long count) {
    std::lock_guard<std::mutex> lock(prime_mutex());
    extend_primes_locked(count);
    const auto& cache = prime_cache();
    return std::vector<long>(cache.begin(), cache.begin() + count);
}

Integer nth_prime(long q) {
    if (q < 1) throw invalid_input("prime index must be positive");
    return Integer(primes_first(q).back());
}

PrimeInequalities check_prime_inequalities(long Q) {
    if (Q < 2) throw invalid_input("check_prime_inequalities requires Q >= 2");
    PrimeInequalities out{};

    Integer qfact, half_pow, qq;
    mpz_fac_ui(qfact.get_mpz_t(), static_cast<unsigned long>(Q));
    mpz_ui_pow_ui(qq.get_mpz_t(), static_cast<unsigned long>(Q), static_cast<unsigned long>(Q));
    mpz_ui_pow_ui(half_pow.get_mpz_t(), 2, static_cast<unsigned long>(Q));
    out.factorial_ok = qfact * half_pow <= qq;  // Q! 2^Q <= Q^Q

    const auto& primes = primes_first(Q);
    Rational mertens(1);
    for (long i = 0; i < Q; ++i) mertens *= Rational(primes[i] - 1, primes[i]);
    out.mertens_ok = mertens >= Rational(1, Q);

    Integer pQ(primes[static_cast<size_t>(Q) - 1]);
    for (long prec = 64; prec <= 1L << 16; prec *= 2) {
        Ball lnQ = ln_ball(Rational(Q), prec);
        Rational lower_bound_hi = Rational(3, 4) * Q * lnQ.upper();
        Rational lower_bound_lo = Rational(3, 4) * Q * lnQ.lower();
        Rational upper_bound_lo = Rational(5, 4) * Q * lnQ.lower();
        Rational upper_bound_hi = Rational(5, 4) * Q * lnQ.upper();
        Rational p(pQ);
        bool low_true = lower_bound_hi <= p, low_false = lower_bound_lo > p;
        bool up_true = p <= upper_bound_lo, up_false = p > upper_bound_hi;
        if ((low_true || low_false) && (up_true || up_false)) {
            out.prime_count_ok = low_true && up_true;
            return out;
        }
    }
    throw internal_error("prime-count inequality undecided at maximal precision");
}

} // namespace wreathlab

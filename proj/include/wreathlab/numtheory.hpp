#pragma once

#include <vector>

#include "wreathlab/rational.hpp"

namespace wreathlab {

struct PrimeFactor {
    Integer prime;
    unsigned exponent;
};

// Complete factorization with strictly increasing primes.
struct Factorization {
    std::vector<PrimeFactor> factors;
    Integer value() const;
};

struct FactorOptions {
    unsigned long seed = 1;
    unsigned long long budget = 10'000'000;  // rho iteration budget
};

// Deterministic Miller-Rabin; the witness set is proven complete for
// n < 3.3e24, far beyond the ~1e18 scale this library targets.
bool is_prime(const Integer& n);

// Trial division up to 10^4, then Brent's cycle-finding splitter with
// deterministic restarts derived from the seed.
Factorization factorize(const Integer& n, const FactorOptions& opt = {});

Integer euler_phi(const Integer& n, const FactorOptions& opt = {});

std::vector<Integer> divisors(const Factorization& f);

// Checks sum over k | gcd(m,n) of phi(k) == gcd(m,n); always true.
bool phi_divisor_sum_matches_gcd(const Integer& m, const Integer& n);

// Gcd-sum function a(n) = sum_{i=1..n} gcd(i,n) = n sum_{d|n} phi(d)/d,
// evaluated through the multiplicative closed form a(p^e) = p^e + e p^(e-1)(p-1).
Integer gcd_sum(const Integer& n, const FactorOptions& opt = {});

// First q primes are available after the call; p(1) = 2.
Integer nth_prime(long q);
std::vector<long> primes_first(long count);

struct PrimeInequalities {
    bool factorial_ok;    // Q! <= (Q/2)^Q
    bool prime_count_ok;  // 3/4 <= p_Q / (Q ln Q) <= 5/4
    bool mertens_ok;      // prod_{i<=Q} (1 - 1/p_i) >= 1/Q
};

// The factorial and Mertens checks are exact rational comparisons; the
// prime-count check uses certified ln enclosures, widening precision until
// the verdict is decided. Requires Q >= 2.
PrimeInequalities check_prime_inequalities(long Q);

} // namespace wreathlab

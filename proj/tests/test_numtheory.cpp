#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "wreathlab/errors.hpp"
#include "wreathlab/numtheory.hpp"

using namespace wreathlab;

namespace {

// Brute-force oracles, independent of the implementation paths they check.
long phi_by_counting(long n) {
    long count = 0;
    for (long i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++count;
    return count;
}

Integer gcd_sum_by_definition(long n) {
    Integer sum(0);
    for (long i = 1; i <= n; ++i) sum += std::gcd(i, n);
    return sum;
}

Integer gcd_sum_by_divisors(long n) {
    Integer sum(0);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) sum += Integer(n / d) * phi_by_counting(d);
    return sum;
}

} // namespace

TEST_CASE("euler phi on pinned values") {
    CHECK(euler_phi(Integer(1)) == 1);
    CHECK(euler_phi(Integer(12)) == phi_by_counting(12));
    CHECK(phi_by_counting(12) == 4);
    CHECK(euler_phi(Integer(1024)) == 512);
    CHECK_THROWS_AS(euler_phi(Integer(0)), invalid_input);
}

TEST_CASE("phi is multiplicative on coprime pairs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(1, 1000000);
    int found = 0;
    while (found < 40) {
        long m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        ++found;
        CHECK(euler_phi(Integer(m) * Integer(n)) == euler_phi(Integer(m)) * euler_phi(Integer(n)));
    }
}

TEST_CASE("factorize on pinned values") {
    CHECK(factorize(Integer(1)).factors.empty());

    auto f216 = factorize(Integer(216));
    REQUIRE(f216.factors.size() == 2);
    CHECK(f216.factors[0].prime == 2);
    CHECK(f216.factors[0].exponent == 3);
    CHECK(f216.factors[1].prime == 3);
    CHECK(f216.factors[1].exponent == 3);

    auto f = factorize(Integer(10403));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 101);
    CHECK(f.factors[1].prime == 103);

    CHECK_THROWS_AS(factorize(Integer(0)), invalid_input);
}

TEST_CASE("factorize reassembles random inputs and certifies primality") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<unsigned long long> dist(2, 1000000000000ULL);
    for (int i = 0; i < 60; ++i) {
        Integer n(static_cast<unsigned long>(dist(rng) >> 16));
        n = n * 65536 + static_cast<unsigned long>(dist(rng) & 0xffff);
        if (n < 2) continue;
        auto f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& pf : f.factors) CHECK(is_prime(pf.prime));
        for (size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].prime < f.factors[j].prime);
    }
}

TEST_CASE("deterministic primality on known cases") {
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer("3215031751")) == false);      // strong pseudoprime to 2,3,5,7
    CHECK(is_prime(Integer("341550071728321")) == false); // strong pseudoprime to 2..17
    CHECK(is_prime(Integer("2305843009213693951")));      // 2^61 - 1
    CHECK(is_prime(Integer(10403)) == false);
}

TEST_CASE("divisor lists") {
    auto d = divisors(factorize(Integer(12)));
    CHECK(d == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("factorization budget is enforced") {
    // Semiprime with ten-digit factors; a ten-iteration budget cannot split it.
    Integer hard = Integer("1000000007") * Integer("1000000009");
    FactorOptions opt;
    opt.budget = 10;
    CHECK_THROWS_AS(factorize(hard, opt), budget_exceeded);
    opt.budget = 50'000'000;
    auto f = factorize(hard, opt);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == Integer("1000000007"));
}

TEST_CASE("phi divisor sum identity") {
    CHECK(phi_divisor_sum_matches_gcd(Integer(6), Integer(4)));
    CHECK(phi_divisor_sum_matches_gcd(Integer(1), Integer(1)));
    CHECK(phi_divisor_sum_matches_gcd(Integer(12), Integer(18)));
    for (long m = 1; m <= 40; ++m)
        for (long n = 1; n <= 40; ++n)
            CHECK(phi_divisor_sum_matches_gcd(Integer(m), Integer(n)));
}

TEST_CASE("gcd-sum pinned values and three-way agreement") {
    CHECK(gcd_sum(Integer(1)) == 1);
    CHECK(gcd_sum(Integer(6)) == 15);
    CHECK(gcd_sum(Integer(4)) == 8);
    CHECK(gcd_sum_by_definition(6) == 15);
    for (long n = 1; n <= 2000; ++n) {
        Integer a = gcd_sum(Integer(n));
        CHECK(a == gcd_sum_by_definition(n));
        CHECK(a == gcd_sum_by_divisors(n));
    }
}

TEST_CASE("prime listing") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(10) == 29);
    CHECK(nth_prime(100) == 541);
    auto first5 = primes_first(5);
    CHECK(first5 == std::vector<long>{2, 3, 5, 7, 11});
}

TEST_CASE("prime inequality checks on pinned cases") {
    auto q8 = check_prime_inequalities(8);
    CHECK(q8.factorial_ok);  // 40320 <= 4^8 = 65536

    auto q2 = check_prime_inequalities(2);
    CHECK_FALSE(q2.factorial_ok);  // 2 <= 1 fails

    auto q100 = check_prime_inequalities(100);
    CHECK(q100.mertens_ok);

    // p_10 = 29 > (5/4) * 10 * ln 10 = 28.78..., so the prime-count window
    // fails at Q = 10 and holds from Q = 11 on.
    CHECK_FALSE(check_prime_inequalities(10).prime_count_ok);
    CHECK(check_prime_inequalities(11).prime_count_ok);
}

TEST_CASE("all three inequalities hold on a 50-wide window") {
    for (long Q = 11; Q <= 61; ++Q) {
        auto r = check_prime_inequalities(Q);
        CHECK(r.factorial_ok);
        CHECK(r.prime_count_ok);
        CHECK(r.mertens_ok);
    }
}

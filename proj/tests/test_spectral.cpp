#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>

#include "wreathlab/projections.hpp"
#include "wreathlab/spectral.hpp"

using namespace wreathlab;

namespace {

std::shared_ptr<const FiniteAbelianGroup> cyclic(int n) {
    return std::make_shared<const FiniteAbelianGroup>(std::vector<int>{n});
}

WreathRingQ shift(const std::shared_ptr<const WreathGroup>& W, long k) {
    return WreathRingQ::monomial(W, W->shift_power(k), Rational(1));
}

Rational expected_interval_trace(const Rational& W, int n) {
    return (W - 1) * (W - 1) / rational_pow(W, static_cast<unsigned long>(n));
}

} // namespace

TEST_CASE("setup validation") {
    CHECK_THROWS_AS(average_setup(cyclic(1)), invalid_input);  // e = 1 is trivial
    auto U = cyclic(2);
    CHECK_THROWS_AS(make_setup(U, FagRingQ::zero(U)), invalid_input);
    FagRingQ not_projection = FagRingQ::monomial(U, {1}, Rational(1, 2));
    CHECK_THROWS_AS(make_setup(U, not_projection), invalid_input);

    SpectralSetup s = average_setup(U);
    CHECK(s.W == 2);
    CHECK(s.T.star() == s.T);
    CHECK(s.T.trace() == 0);
}

TEST_CASE("interval projections and their traces") {
    SpectralSetup c2 = average_setup(cyclic(2));
    WreathRingQ q2 = interval_projection(c2, 2);
    CHECK(q2.is_projection());
    CHECK(q2.trace() == Rational(1, 4));
    CHECK(q2 == complement_at(c2, 1) * complement_at(c2, 2));

    CHECK(interval_projection(c2, 3).trace() == Rational(1, 8));

    SpectralSetup c3 = average_setup(cyclic(3));
    CHECK(interval_projection(c3, 2).trace() == Rational(4, 9));

    CHECK_THROWS_AS(interval_projection(c2, 1), invalid_input);
}

TEST_CASE("interval projections for small n are projections with the stated trace") {
    for (int order : {2, 3}) {
        SpectralSetup s = average_setup(cyclic(order));
        for (int n = 2; n <= 5; ++n) {
            WreathRingQ q = interval_projection(s, n);
            CHECK(q.is_projection());
            CHECK(q.trace() == expected_interval_trace(s.W, n));
        }
    }
    SpectralSetup klein = average_setup(std::make_shared<const FiniteAbelianGroup>(
        std::vector<int>{2, 2}));
    for (int n = 2; n <= 4; ++n) {
        WreathRingQ q = interval_projection(klein, n);
        CHECK(q.is_projection());
        CHECK(q.trace() == expected_interval_trace(Rational(4), n));
    }
}

TEST_CASE("interval orthogonality") {
    SpectralSetup c2 = average_setup(cyclic(2));
    CHECK(check_interval_orthogonality(c2, 3));

    WreathRingQ q2 = interval_projection(c2, 2);
    CHECK(q2 * q2 == q2);  // diagonal case
}

TEST_CASE("cross interval products vanish") {
    SpectralSetup c2 = average_setup(cyclic(2));
    WreathRingQ q2 = interval_projection(c2, 2);
    WreathRingQ q3 = interval_projection(c2, 3);
    // (n,m) = (2,1), (n',m') = (3,1): q_3 t^{-1} t^1 q_2 = q_3 q_2 = 0
    CHECK((q3 * q2).is_zero());
}

TEST_CASE("shift action") {
    SpectralSetup c2 = average_setup(cyclic(2));
    CHECK(check_shift_action(c2, 2));
    CHECK(check_shift_action(c2, 3));

    WreathRingQ q2 = interval_projection(c2, 2);
    CHECK((c2.T * shift(c2.wreath, 1) * q2).is_zero());  // A_2 = (0)

    WreathRingQ q3 = interval_projection(c2, 3);
    CHECK(c2.T * shift(c2.wreath, 1) * q3 == shift(c2.wreath, 2) * q3);

    SpectralSetup c3 = average_setup(cyclic(3));
    WreathRingQ q4 = interval_projection(c3, 4);
    CHECK(c3.T * shift(c3.wreath, 2) * q4 ==
          shift(c3.wreath, 1) * q4 + shift(c3.wreath, 3) * q4);
}

TEST_CASE("eigenspace projections match the direct r r* product on small cases") {
    for (int order : {2, 3}) {
        SpectralSetup s = average_setup(cyclic(order));
        for (int n = 2; n <= 3; ++n) {
            for (int m = 1; m < n; ++m) {
                WreathRingC r = eigen_partial_isometry(s, m, n);
                WreathRingC direct = (r * r.star()).scaled(CyclotomicNumber(frac(2, n)));
                CHECK(direct == eigenspace_projection(s, m, n));
            }
        }
    }
}

TEST_CASE("eigenspace projections: trace, eigen relation, idempotence") {
    SpectralSetup c2 = average_setup(cyclic(2));

    WreathRingC p12 = eigenspace_projection(c2, 1, 2);
    CHECK(p12.trace() == CyclotomicNumber(Rational(1, 4)));
    CHECK((promote(c2.T) * p12).is_zero());  // eigenvalue 0
    CHECK(p12 * p12 == p12);
    CHECK(p12.star() == p12);

    WreathRingC p13 = eigenspace_projection(c2, 1, 3);
    CHECK(p13.trace() == CyclotomicNumber(Rational(1, 8)));
    CHECK(promote(c2.T) * p13 == p13);  // lambda_{1,3} = 1
    CHECK(p13 * p13 == p13);

    WreathRingC p23 = eigenspace_projection(c2, 2, 3);
    CHECK(p23.trace() == CyclotomicNumber(Rational(1, 8)));
    CHECK(promote(c2.T) * p23 == p23.scaled(CyclotomicNumber(-1L)));  // lambda = -1
}

TEST_CASE("eigen orthogonality suite at n_max 3") {
    SpectralSetup c2 = average_setup(cyclic(2));
    CHECK(check_eigen_orthogonality(c2, 3));

    // r*_{1,2} r_{1,2} = (2/2) q_2 directly
    WreathRingC r = eigen_partial_isometry(c2, 1, 2);
    CHECK(r.star() * r == promote(interval_projection(c2, 2)));
    // cross pair (1,2) x (1,3) vanishes after embedding into a common field
    WreathRingC r13 = eigen_partial_isometry(c2, 1, 3);
    CHECK((embed_coefficients(r13, 24).star() * embed_coefficients(r, 24)).is_zero());
}

TEST_CASE("setup from a constructed trace-2/5 projection has W = 5/2") {
    auto cert = projection_with_trace(Rational(2, 5));
    SpectralSetup s = make_setup(cert.e.group(), cert.e);
    CHECK(s.W == Rational(5, 2));
    WreathRingQ q2 = interval_projection(s, 2);
    CHECK(q2.is_projection());
    CHECK(q2.trace() == Rational(9, 25));  // (W-1)^2 / W^2
    CHECK(atom_mass(s.W, 2) == Rational(9, 4) / Rational(21, 4));
}

TEST_CASE("atom masses") {
    CHECK(atom_mass(Rational(2), 2) == Rational(1, 3));
    CHECK(atom_mass(Rational(2), 3) == Rational(1, 7));
    CHECK(atom_mass(Rational(5, 2), 2) == Rational(9, 4) / Rational(21, 4));
    CHECK_THROWS_AS(atom_mass(Rational(1), 2), invalid_input);
    CHECK_THROWS_AS(atom_mass(Rational(2), 1), invalid_input);
}

TEST_CASE("atom mass equals the regrouped geometric series") {
    for (const Rational& W : {Rational(2), Rational(3), Rational(5, 2)}) {
        for (int n0 = 2; n0 <= 5; ++n0) {
            // sum_{i=1..I} (W-1)^2 W^{-i n0} + geometric tail = mass
            Rational sum(0);
            int I = 30;
            for (int i = 1; i <= I; ++i)
                sum += (W - 1) * (W - 1) / rational_pow(W, static_cast<unsigned long>(i) * n0);
            Rational ratio = 1 / rational_pow(W, static_cast<unsigned long>(n0));
            Rational tail = (W - 1) * (W - 1) *
                            rational_pow(ratio, static_cast<unsigned long>(I) + 1) / (1 - ratio);
            CHECK(sum + tail == atom_mass(W, n0));
        }
    }
}

TEST_CASE("decimal recognition") {
    AtomLookup hit = recognize_atom(Rational(2), Rational(0));
    CHECK(hit.recognized);
    CHECK(hit.n == 2);
    CHECK(hit.mass == Rational(1, 3));

    AtomLookup miss = recognize_atom(Rational(2), parse_rational("0.123"));
    CHECK_FALSE(miss.recognized);
    CHECK(miss.mass == 0);

    AtomLookup one = recognize_atom(Rational(2), Rational(1));
    CHECK(one.recognized);
    CHECK(one.n == 3);
    CHECK(one.mass == Rational(1, 7));
}

TEST_CASE("mass partial sums and exact tail") {
    CHECK(mass_partial_sum(Rational(2), 2) == Rational(1, 4));
    CHECK(mass_partial_sum(Rational(2), 3) == Rational(1, 2));
    CHECK(mass_partial_sum(Rational(2), 20) == 1 - Rational(21, 1048576));
    for (const Rational& W : {Rational(2), Rational(5, 2)}) {
        Rational prev(0);
        for (int N = 2; N <= 12; ++N) {
            Rational partial = mass_partial_sum(W, N);
            CHECK(partial > prev);
            CHECK(partial + mass_tail(W, N) == 1);
            prev = partial;
        }
    }
}

TEST_CASE("determinant identity delegate") {
    CHECK(check_determinant_identity(2));
    CHECK(check_determinant_identity(6));
    CHECK(check_determinant_identity(12));
}

TEST_CASE("atom listing covers coprime pairs") {
    auto atoms = atoms_up_to(Rational(2), 5);
    // phi(2)+phi(3)+phi(4)+phi(5) = 1+2+2+4 = 9
    CHECK(atoms.size() == 9);
    for (const auto& atom : atoms) {
        CHECK(std::gcd(atom.m, atom.n) == 1);
        double expect = 2.0 * std::cos(std::numbers::pi * atom.m / atom.n);
        CHECK(std::abs(atom.lambda.to_double() - expect) < 1e-12);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "wreathlab/products.hpp"
#include "wreathlab/spectral.hpp"

using namespace wreathlab;

namespace {

// Brute-force count of (m, m') with 1 <= m < n, 1 <= m' < n', m/n = m'/n'.
long matching_rotation_pairs(int n, int np) {
    long count = 0;
    for (int m = 1; m < n; ++m)
        for (int mp = 1; mp < np; ++mp)
            if (static_cast<long>(m) * np == static_cast<long>(mp) * n) ++count;
    return count;
}

} // namespace

TEST_CASE("double-sum partials on pinned values") {
    auto d = dim_ker_difference(Rational(2), Rational(2), 2);
    CHECK(d.partial == Rational(1, 16));  // only the (2,2) cell contributes

    auto degenerate = dim_ker_difference(Rational(2), Rational(3), 1);
    CHECK(degenerate.partial == 0);  // gcd(1,1) - 1 = 0

    auto single = dim_ker_difference(Rational(2), Rational(3), 2);
    // cells: (2,2) only, with gcd 2: (2-1) * 1 * 4 / (4*9) = 1/9
    CHECK(single.partial == Rational(1, 9));

    CHECK_THROWS_AS(dim_ker_difference(Rational(1), Rational(2), 10), invalid_input);
}

TEST_CASE("rotation pair counts match gcd - 1") {
    for (int n = 1; n <= 30; ++n)
        for (int np = 1; np <= 30; ++np)
            CHECK(matching_rotation_pairs(n, np) == std::gcd(n, np) - 1);
}

TEST_CASE("kappa matches the known ten digits") {
    KappaReport r = kappa_evaluate({Rational(1, 2), Rational(1, 2), 12});
    std::string lo = to_decimal_string(r.value.lower(), 10, Rounding::Down);
    std::string hi = to_decimal_string(r.value.upper(), 10, Rounding::Down);
    CHECK(lo == "0.1659457149");
    CHECK(hi == "0.1659457149");
}

TEST_CASE("kappa tail bound at 400 terms is far below 1e-201") {
    KappaReport r = kappa_partial({Rational(1, 2), Rational(1, 2), 200}, 400);
    Rational bound(1, pow10(201));
    CHECK(r.tail_bound.upper() < bound);
    CHECK(r.terms_used == 400);
}

TEST_CASE("kappa balls are nested as the truncation grows") {
    KappaParams params{Rational(1, 2), Rational(1, 2), 30};
    KappaReport k1 = kappa_partial(params, 20);
    KappaReport k2 = kappa_partial(params, 40);
    KappaReport k3 = kappa_partial(params, 80);
    CHECK(k1.value.contains(k2.value));
    CHECK(k2.value.contains(k3.value));
    CHECK(k2.value.upper() - k2.value.lower() < k1.value.upper() - k1.value.lower());
}

TEST_CASE("kappa validates its parameters") {
    CHECK_THROWS_AS(kappa_evaluate({Rational(2), Rational(1, 2), 10}), invalid_input);
    CHECK_THROWS_AS(kappa_evaluate({Rational(1, 2), Rational(1, 2), 20000}), budget_exceeded);
}

TEST_CASE("double and single sums agree within certified bounds") {
    for (const auto& [X, Y] : std::vector<std::pair<Rational, Rational>>{
             {Rational(2), Rational(2)}, {Rational(2), Rational(3)},
             {Rational(5, 2), Rational(3)}}) {
        auto d = dim_ker_difference(X, Y, 120);
        KappaReport k = kappa_evaluate({1 / X, 1 / Y, 30});
        Ball double_route = Ball::from_endpoints(d.partial, d.partial + d.tail.upper(), 256);
        CHECK(double_route.intersects(k.value));
    }
}

TEST_CASE("gcd coefficient identity") {
    CHECK(check_gcd_coefficient_identity(1));
    CHECK(check_gcd_coefficient_identity(12));
    CHECK(check_gcd_coefficient_identity(100));
}

TEST_CASE("rationality probe on an exact rational") {
    KappaReport fake;
    fake.p = Rational(1, 3);
    fake.q = Rational(1, 3);
    fake.digits = 30;
    fake.value = Ball::from_rational(Rational(1, 3), 256);
    fake.terms_used = 0;
    fake.tail_bound = Ball::exact_zero(256);
    fake.cf = cf_expand(Rational(1, 3), Rational(1, 3), 100);
    fake.min_denominator_witness = 3;
    auto verdict = probe_rationality(fake, Integer(1000));
    CHECK(verdict.exact_rational);
    REQUIRE(verdict.exact_value.has_value());
    CHECK(*verdict.exact_value == Rational(1, 3));
}

TEST_CASE("rationality probe needs enough digits") {
    KappaReport shallow = kappa_evaluate({Rational(1, 2), Rational(1, 2), 15});
    CHECK_THROWS_AS(probe_rationality(shallow, pow10(100)), needs_more_digits);
}

TEST_CASE("rationality probe reaches the 1e100 verdict at 210 digits") {
    KappaReport deep = kappa_evaluate({Rational(1, 2), Rational(1, 2), 210});
    auto verdict = probe_rationality(deep, pow10(100));
    CHECK_FALSE(verdict.exact_rational);
    CHECK(verdict.denominator_exceeds_bound);
    CHECK(verdict.certified_terms >= 150);
    CHECK(verdict.largest_denominator > pow10(100));
}

TEST_CASE("interval projection traces multiply in the product ring") {
    auto U = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{2});
    auto V = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{3});
    SpectralSetup left = average_setup(U);
    SpectralSetup right = average_setup(V);
    auto G = std::make_shared<const ProductGroup>(*left.wreath, *right.wreath);
    for (int n = 2; n <= 4; ++n) {
        for (int np = 2; np <= 4; ++np) {
            WreathRingQ qn = interval_projection(left, n);
            WreathRingQ qnp = interval_projection(right, np);
            ProductRingQ both = product_embed(G, qn, qnp);
            CHECK(both.trace() == qn.trace() * qnp.trace());
            CHECK(both == embed_left(G, qn) * embed_right(G, qnp));
        }
    }
}

TEST_CASE("product eigenprojection traces multiply") {
    auto U = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{2});
    auto V = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{3});
    SpectralSetup left = average_setup(U);
    SpectralSetup right = average_setup(V);
    auto G = std::make_shared<const ProductGroup>(*left.wreath, *right.wreath);
    const Rational X = left.W, Y = right.W;
    for (int n = 2; n <= 4; ++n) {
        for (int np = 2; np <= 4; ++np) {
            long N = std::lcm(4L * n, 4L * np);
            for (int m = 1; m < n; ++m) {
                for (int mp = 1; mp < np; ++mp) {
                    auto p = embed_coefficients(eigenspace_projection(left, m, n), N);
                    auto q = embed_coefficients(eigenspace_projection(right, mp, np), N);
                    auto pq = product_embed(G, p, q);
                    Rational expect = (X - 1) * (X - 1) * (Y - 1) * (Y - 1) /
                                      (rational_pow(X, static_cast<unsigned long>(n)) *
                                       rational_pow(Y, static_cast<unsigned long>(np)));
                    CHECK(pq.trace() == CyclotomicNumber(expect));
                }
            }
        }
    }
}

TEST_CASE("integral difference operator for p = q = 1/2") {
    auto report = check_integral_difference(Rational(1, 2), Rational(1, 2), 2);
    CHECK(report.scale == 4);
    CHECK(report.all_integer);
    CHECK(report.eigen_ok);
}

TEST_CASE("4(T - S) has every coefficient equal to +-2") {
    auto U = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{2});
    SpectralSetup left = average_setup(U);
    SpectralSetup right = average_setup(U);
    auto G = std::make_shared<const ProductGroup>(*left.wreath, *right.wreath);
    ProductRingQ Z = (embed_left(G, left.T) - embed_right(G, right.T)).scaled(Rational(4));
    CHECK(Z.support_size() == 8);
    for (const auto& [elem, coeff] : Z.terms()) CHECK(abs(coeff) == 2);
}

TEST_CASE("integral difference operator for p = 1/2, q = 1/3") {
    auto report = check_integral_difference(Rational(1, 2), Rational(1, 3), 2);
    CHECK(report.scale == 12);  // C_2 and C_6
    CHECK(report.all_integer);
    CHECK(report.eigen_ok);
}

TEST_CASE("difference operator kills matched product eigenprojections") {
    auto U = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{2});
    SpectralSetup left = average_setup(U);
    SpectralSetup right = average_setup(U);
    auto G = std::make_shared<const ProductGroup>(*left.wreath, *right.wreath);
    ProductRingQ difference = embed_left(G, left.T) - embed_right(G, right.T);
    auto p = eigenspace_projection(left, 1, 2);
    auto q = eigenspace_projection(right, 1, 2);
    auto pq = product_embed(G, embed_coefficients(p, 8), embed_coefficients(q, 8));
    CHECK((embed_coefficients(promote(difference), 8) * pq).is_zero());
}

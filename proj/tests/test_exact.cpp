#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wreathlab/ball.hpp"
#include "wreathlab/contfrac.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/laurent.hpp"

using namespace wreathlab;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 40);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("fraction strings are canonical") {
    CHECK(to_fraction_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
    CHECK(parse_rational("-3/7") == Rational(-3, 7));
    CHECK(parse_rational("1.25") == Rational(5, 4));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("x/y"), invalid_input);
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal_string(Rational(1, 3), 6, Rounding::Down) == "0.333333");
    CHECK(to_decimal_string(Rational(1, 3), 6, Rounding::Up) == "0.333334");
    CHECK(to_decimal_string(Rational(-1, 3), 4, Rounding::Down) == "-0.3334");
    CHECK(to_decimal_string(Rational(5, 4), 2) == "1.25");
    CHECK(to_decimal_string(Rational(2), 0) == "2");
    CHECK(parse_magnitude("1e100") == pow10(100));
    CHECK(parse_magnitude("10^100") == pow10(100));
}

TEST_CASE("ball from rational") {
    Ball half = Ball::from_rational(Rational(1, 2), 64);
    CHECK(half.is_exact());
    CHECK(half.center() == Rational(1, 2));

    Ball third = Ball::from_rational(Rational(1, 3), 16);
    CHECK(third.contains(Rational(1, 3)));
    CHECK(third.radius() <= Rational(1, 1 << 15));

    Ball zero = Ball::from_rational(Rational(0), 64);
    CHECK(zero.is_exact());
    CHECK(zero.center() == 0);

    CHECK_THROWS_AS(Ball::from_rational(Rational(1, 3), 8), invalid_input);
}

TEST_CASE("ball arithmetic containment") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        Ball ba = Ball::from_rational(a, 64);
        Ball bb = Ball::from_rational(b, 64);
        CHECK((ba + bb).contains(a + b));
        CHECK((ba - bb).contains(a - b));
        CHECK((ba * bb).contains(a * b));
        if (b != 0 && !bb.contains(Rational(0))) CHECK((ba / bb).contains(a / b));
    }
}

TEST_CASE("ball division rejects zero divisor") {
    Ball a = Ball::from_rational(Rational(1), 64);
    Ball z = Ball::from_endpoints(Rational(-1, 10), Rational(1, 10), 64);
    CHECK_THROWS_AS(a / z, invalid_input);
}

TEST_CASE("ln enclosures match known digits") {
    Ball ln2 = ln_ball(Rational(2), 96);
    CHECK(ln2.lower() > parse_rational("0.69314718055994"));
    CHECK(ln2.upper() < parse_rational("0.69314718055995"));
    Ball ln10 = ln_ball(Rational(10), 96);
    CHECK(ln10.lower() > parse_rational("2.302585092994045"));
    CHECK(ln10.upper() < parse_rational("2.302585092994046"));
    Ball ln1 = ln_ball(Rational(1), 64);
    CHECK(ln1.contains(Rational(0)));
    CHECK_THROWS_AS(ln_ball(Rational(0), 64), invalid_input);
}

TEST_CASE("cf of a point rational runs the Euclidean algorithm") {
    auto report = cf_expand(Rational(45, 16), Rational(45, 16), 10);
    REQUIRE(report.terms.size() == 4);
    CHECK(report.terms[0] == 2);
    CHECK(report.terms[1] == 1);
    CHECK(report.terms[2] == 4);
    CHECK(report.terms[3] == 3);
    CHECK(report.exact);
    CHECK(report.exact_value == Rational(45, 16));
    CHECK(report.convergents.back() == Rational(45, 16));
}

TEST_CASE("cf of an integer") {
    auto report = cf_expand(Rational(7), Rational(7), 10);
    REQUIRE(report.terms.size() == 1);
    CHECK(report.terms[0] == 7);
    CHECK(report.exact);
}

TEST_CASE("cf common prefix over a small interval") {
    auto report = cf_expand(parse_rational("1.41421356"), parse_rational("1.41421357"), 20);
    REQUIRE(report.certified() >= 5);
    CHECK(report.terms[0] == 1);
    for (size_t i = 1; i < 5; ++i) CHECK(report.terms[i] == 2);
    CHECK_FALSE(report.exact);
}

TEST_CASE("cf rejects an empty interval") {
    CHECK_THROWS_AS(cf_expand(Rational(1), Rational(0), 5), invalid_input);
}

TEST_CASE("cf convergents satisfy the standard recurrence") {
    auto report = cf_expand(parse_rational("0.1659457149"), parse_rational("0.1659457150"), 50);
    REQUIRE(report.certified() >= 3);
    Integer h2(0), h1(1), k2(1), k1(0);
    for (size_t i = 0; i < report.terms.size(); ++i) {
        Integer h = report.terms[i] * h1 + h2;
        Integer k = report.terms[i] * k1 + k2;
        Rational conv(h, k);
        conv.canonicalize();
        CHECK(report.convergents[i] == conv);
        h2 = h1; h1 = h;
        k2 = k1; k1 = k;
    }
    for (size_t i = 2; i + 1 < report.convergents.size(); ++i)
        CHECK(report.convergents[i].get_den() < report.convergents[i + 1].get_den());
}

TEST_CASE("tridiagonal determinant base cases") {
    LaurentPoly mu = LaurentPoly::variable_power(1);
    LaurentPoly mu_inv = LaurentPoly::variable_power(-1);
    CHECK(tridiagonal_det(2) == mu + mu_inv);

    LaurentPoly expected3 = LaurentPoly::variable_power(2) + LaurentPoly(Rational(1)) +
                            LaurentPoly::variable_power(-2);
    CHECK(tridiagonal_det(3) == expected3);

    LaurentPoly expected5;
    for (int k : {-4, -2, 0, 2, 4})
        expected5 = expected5 + LaurentPoly::variable_power(k);
    CHECK(tridiagonal_det(5) == expected5);

    CHECK_THROWS_AS(tridiagonal_det(1), invalid_input);
}

TEST_CASE("tridiagonal determinant telescopes for n <= 12") {
    LaurentPoly mu = LaurentPoly::variable_power(1);
    LaurentPoly mu_inv = LaurentPoly::variable_power(-1);
    for (int n = 2; n <= 12; ++n) {
        LaurentPoly lhs = tridiagonal_det(n) * (mu - mu_inv);
        LaurentPoly rhs = LaurentPoly::variable_power(n) - LaurentPoly::variable_power(-n);
        CHECK(lhs == rhs);
    }
}

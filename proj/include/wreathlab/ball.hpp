#pragma once

#include <string>

#include "wreathlab/rational.hpp"

namespace wreathlab {

// Certified real interval stored as binary fixed point:
//   value set = [center - radius, center + radius] * 2^-prec.
// Every operation rounds the radius outward, so the ball of a result always
// contains the exact image of the input intervals.
class Ball {
public:
    Ball() : c_(0), r_(0), prec_(64) {}

    static Ball from_rational(const Rational& x, long prec_bits);
    static Ball from_endpoints(const Rational& lo, const Rational& hi, long prec_bits);
    static Ball exact_zero(long prec_bits);

    long prec_bits() const { return prec_; }
    const Integer& center_scaled() const { return c_; }
    const Integer& radius_scaled() const { return r_; }

    Rational center() const;
    Rational radius() const;
    Rational lower() const;
    Rational upper() const;

    bool is_exact() const { return r_ == 0; }
    bool contains(const Rational& x) const;
    bool contains(const Ball& other) const;
    bool intersects(const Ball& other) const;

    // upper() < x, resp. lower() > x: certified strict comparisons.
    bool certainly_less(const Rational& x) const;
    bool certainly_greater(const Rational& x) const;

    Ball operator-() const;
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);

    std::string center_decimal(int digits) const;
    std::string radius_decimal(int digits) const;

private:
    Ball(Integer c, Integer r, long prec) : c_(std::move(c)), r_(std::move(r)), prec_(prec) {}
    Ball rescaled(long prec) const;  // exact when prec >= prec_, outward otherwise

    Integer c_, r_;
    long prec_;
};

// Certified enclosure of ln(x) for rational x > 0, via argument reduction to
// [1,2) and the atanh series with an explicit tail bound.
Ball ln_ball(const Rational& x, long prec_bits);

} // namespace wreathlab

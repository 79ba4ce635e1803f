#include "wreathlab/ball.hpp"

#include <utility>

#include "wreathlab/errors.hpp"

namespace wreathlab {

namespace {

Integer shl(const Integer& x, long bits) {
    Integer out;
    mpz_mul_2exp(out.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return out;
}

// floor(num * 2^bits / den)
Integer scale_floor(const Integer& num, const Integer& den, long bits) {
    Integer t = shl(num, bits), out;
    mpz_fdiv_q(out.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    return out;
}

Integer scale_ceil(const Integer& num, const Integer& den, long bits) {
    Integer t = shl(num, bits), out;
    mpz_cdiv_q(out.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    return out;
}

} // namespace

Ball Ball::from_rational(const Rational& x, long prec_bits) {
    if (prec_bits < 16) throw invalid_input("ball precision must be at least 16 bits");
    Integer num = x.get_num();
    const Integer& den = x.get_den();
    Integer t = shl(num, prec_bits), c, rem;
    mpz_fdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    Integer r = (rem == 0) ? Integer(0) : Integer(1);
    return Ball(std::move(c), std::move(r), prec_bits);
}

Ball Ball::from_endpoints(const Rational& lo, const Rational& hi, long prec_bits) {
    if (prec_bits < 16) throw invalid_input("ball precision must be at least 16 bits");
    if (lo > hi) throw invalid_input("empty interval");
    Integer slo = scale_floor(lo.get_num(), lo.get_den(), prec_bits);
    Integer shi = scale_ceil(hi.get_num(), hi.get_den(), prec_bits);
    Integer c = slo + shi;
    mpz_fdiv_q_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
    Integer r1 = shi - c, r2 = c - slo;
    return Ball(std::move(c), r1 > r2 ? std::move(r1) : std::move(r2), prec_bits);
}

Ball Ball::exact_zero(long prec_bits) {
    if (prec_bits < 16) throw invalid_input("ball precision must be at least 16 bits");
    return Ball(Integer(0), Integer(0), prec_bits);
}

Rational Ball::center() const {
    Rational q(c_, shl(1, prec_));
    q.canonicalize();
    return q;
}

Rational Ball::radius() const {
    Rational q(r_, shl(1, prec_));
    q.canonicalize();
    return q;
}

Rational Ball::lower() const {
    Rational q(c_ - r_, shl(1, prec_));
    q.canonicalize();
    return q;
}

Rational Ball::upper() const {
    Rational q(c_ + r_, shl(1, prec_));
    q.canonicalize();
    return q;
}

bool Ball::contains(const Rational& x) const { return lower() <= x && x <= upper(); }

bool Ball::contains(const Ball& other) const {
    return lower() <= other.lower() && other.upper() <= upper();
}

bool Ball::intersects(const Ball& other) const {
    return !(upper() < other.lower() || other.upper() < lower());
}

bool Ball::certainly_less(const Rational& x) const { return upper() < x; }
bool Ball::certainly_greater(const Rational& x) const { return lower() > x; }

Ball Ball::rescaled(long prec) const {
    if (prec == prec_) return *this;
    if (prec > prec_) return Ball(shl(c_, prec - prec_), shl(r_, prec - prec_), prec);
    long drop = prec_ - prec;
    Integer c;
    mpz_fdiv_q_2exp(c.get_mpz_t(), c_.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    Integer r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), r_.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    return Ball(std::move(c), r + 1, prec);  // +1 covers the floored center
}

Ball Ball::operator-() const { return Ball(-c_, r_, prec_); }

Ball operator+(const Ball& a, const Ball& b) {
    long p = std::max(a.prec_, b.prec_);
    Ball x = a.rescaled(p), y = b.rescaled(p);
    return Ball(x.c_ + y.c_, x.r_ + y.r_, p);
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
    long p = std::max(a.prec_, b.prec_);
    Ball x = a.rescaled(p), y = b.rescaled(p);
    // Products land at scale 2^-2p; bring them back to 2^-p outward.
    Integer c2 = x.c_ * y.c_;
    Integer r2 = abs(x.c_) * y.r_ + abs(y.c_) * x.r_ + x.r_ * y.r_;
    Integer c, r;
    mpz_fdiv_q_2exp(c.get_mpz_t(), c2.get_mpz_t(), static_cast<mp_bitcnt_t>(p));
    mpz_cdiv_q_2exp(r.get_mpz_t(), r2.get_mpz_t(), static_cast<mp_bitcnt_t>(p));
    return Ball(std::move(c), r + 1, p);
}

Ball operator/(const Ball& a, const Ball& b) {
    long p = std::max(a.prec_, b.prec_);
    Ball x = a.rescaled(p), y = b.rescaled(p);
    Integer blo = y.c_ - y.r_, bhi = y.c_ + y.r_;
    if (blo <= 0 && bhi >= 0) throw invalid_input("ball division: divisor interval contains zero");
    Integer alo = x.c_ - x.r_, ahi = x.c_ + x.r_;
    // Quotients of same-scale fixed-point values are plain integer ratios.
    bool first = true;
    Integer lo, hi;
    for (const Integer* n : {&alo, &ahi}) {
        for (const Integer* d : {&blo, &bhi}) {
            Integer qlo, qhi;
            if (*d > 0) {
                qlo = scale_floor(*n, *d, p);
                qhi = scale_ceil(*n, *d, p);
            } else {
                Integer nn = -*n, dd = -*d;
                qlo = scale_floor(nn, dd, p);
                qhi = scale_ceil(nn, dd, p);
            }
            if (first || qlo < lo) lo = qlo;
            if (first || qhi > hi) hi = qhi;
            first = false;
        }
    }
    Integer c = lo + hi;
    mpz_fdiv_q_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
    Integer r1 = hi - c, r2 = c - lo;
    return Ball(std::move(c), r1 > r2 ? std::move(r1) : std::move(r2), p);
}

std::string Ball::center_decimal(int digits) const {
    return to_decimal_string(center(), digits, Rounding::Nearest);
}

std::string Ball::radius_decimal(int digits) const {
    return to_decimal_string(radius(), digits, Rounding::Up);
}

namespace {

// [lo, hi] enclosure of 2*atanh(z) = ln((1+z)/(1-z)) for rational 0 <= z < 1/2.
std::pair<Rational, Rational> atanh2_interval(const Rational& z, long prec) {
    // Terms: 2 z^(2k+1)/(2k+1).  Tail after K terms is bounded by the
    // geometric series 2 z^(2K+3) / ((2K+3)(1 - z^2)).
    long terms = prec / 3 + 8;
    Rational sum(0);
    Rational zsq = z * z;
    Rational power = z;  // z^(2k+1)
    for (long k = 0; k < terms; ++k) {
        sum += 2 * power / Rational(2 * k + 1);
        power *= zsq;
    }
    Rational tail = 2 * power / (Rational(2 * terms + 1) * (1 - zsq));
    return {sum, sum + tail};
}

} // namespace

Ball ln_ball(const Rational& x, long prec_bits) {
    if (x <= 0) throw invalid_input("ln of non-positive value");
    if (prec_bits < 16) prec_bits = 16;
    // Reduce to y in [1,2): x = y * 2^m.
    Rational y = x;
    long m = 0;
    while (y >= 2) { y /= 2; ++m; }
    while (y < 1) { y *= 2; --m; }
    Rational z = (y - 1) / (y + 1);  // in [0, 1/3]
    auto [ylo, yhi] = atanh2_interval(z, prec_bits + 8);
    auto [l2lo, l2hi] = atanh2_interval(Rational(1, 3), prec_bits + 8);
    Rational lo, hi;
    if (m >= 0) {
        lo = ylo + m * l2lo;
        hi = yhi + m * l2hi;
    } else {
        lo = ylo + m * l2hi;
        hi = yhi + m * l2lo;
    }
    return Ball::from_endpoints(lo, hi, prec_bits);
}

} // namespace wreathlab

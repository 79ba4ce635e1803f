#include "wreathlab/projections.hpp"

namespace wreathlab {

namespace {

constexpr int kMaxDyadicExponent = 24;

std::shared_ptr<const FiniteAbelianGroup> cyclic(long n) {
    return std::make_shared<const FiniteAbelianGroup>(std::vector<int>{static_cast<int>(n)});
}

} // namespace

AdmissibleFraction admissible_fraction(const Rational& q) {
    if (q < 0 || q > 1) throw invalid_input("trace must lie in [0, 1]");
    Rational c(q);
    c.canonicalize();
    Integer m0 = c.get_num();
    Integer n0 = c.get_den();
    unsigned long r0 = mpz_scan1(n0.get_mpz_t(), 0);
    Integer s;
    mpz_fdiv_q_2exp(s.get_mpz_t(), n0.get_mpz_t(), r0);
    // Smallest j >= 0 with 2^(r0 + j) >= s - 1.
    unsigned long r = r0;
    Integer two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, r);
    while (two_r < s - 1) {
        two_r *= 2;
        ++r;
    }
    AdmissibleFraction out;
    out.r = static_cast<int>(r);
    out.s = s;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, r - r0);
    out.m = m0 * scale;
    out.n = n0 * scale;
    return out;
}

FagRingQ dyadic_projection(const Integer& c, int r) {
    if (r < 0) throw invalid_input("negative dyadic exponent");
    if (r > kMaxDyadicExponent) throw budget_exceeded("dyadic group order beyond supported range");
    Integer full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, static_cast<unsigned long>(r));
    if (c < 0 || c > full) throw invalid_input("dyadic trace numerator out of range");
    auto G = cyclic(full.get_si());
    if (c == 0) return FagRingQ::zero(G);
    if (c == full) return FagRingQ::one(G);
    Integer half = full / 2;
    if (c > half) return FagRingQ::one(G) - dyadic_projection(full - c, r);
    // e(c) = lift of e_{r-1}(c) through t_{2^(r-1)}^j -> E t^j with
    // E = (1 + t^(2^(r-1)))/2; E t^j has terms t^j and t^(j + 2^(r-1)).
    FagRingQ inner = dyadic_projection(c, r - 1);
    FagRingQ out(G);
    long h = half.get_si();
    for (const auto& [elem, coeff] : inner.terms()) {
        long j = elem[0];
        out.add_term({static_cast<int>(j)}, coeff / 2);
        out.add_term({static_cast<int>(j + h)}, coeff / 2);
    }
    return out;
}

TraceProjectionCertificate projection_with_trace(const Rational& q) {
    AdmissibleFraction af = admissible_fraction(q);
    TraceProjectionCertificate cert;
    cert.q = q;
    cert.m = af.m;
    cert.n = af.n;
    cert.r = af.r;
    cert.s = af.s;

    if (af.s == 1) {
        cert.a = af.m;
        cert.b = 0;
        cert.e = dyadic_projection(af.m, af.r);
        return cert;
    }

    Integer two_r;
    mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(af.r));
    Integer threshold = two_r * (af.s - 1);
    if (af.m >= threshold) {
        cert.b = two_r;
        cert.a = af.m - (af.s - 1) * cert.b;
    } else {
        mpz_fdiv_qr(cert.b.get_mpz_t(), cert.a.get_mpz_t(), af.m.get_mpz_t(),
                    Integer(af.s - 1).get_mpz_t());
    }

    // Assemble e(a) f + e(b)(1-f) in Q[C_{2^r} x C_s], then carry it to
    // Q[C_n] along the CRT isomorphism.
    long pr = two_r.get_si();
    long so = af.s.get_si();
    auto P = std::make_shared<const FiniteAbelianGroup>(std::vector<int>{
        static_cast<int>(pr), static_cast<int>(so)});
    auto lift_first = [&](const FagRingQ& x) {
        FagRingQ out(P);
        for (const auto& [elem, coeff] : x.terms())
            out.add_term({elem[0], 0}, coeff);
        return out;
    };
    FagRingQ f(P);
    for (int y = 0; y < so; ++y) f.add_term({0, y}, Rational(1, so));
    FagRingQ ea = lift_first(dyadic_projection(cert.a, af.r));
    FagRingQ eb = lift_first(dyadic_projection(cert.b, af.r));
    FagRingQ combined = ea * f + eb * (FagRingQ::one(P) - f);

    long n = cert.n.get_si();
    Integer s_inv, p_inv;
    mpz_invert(s_inv.get_mpz_t(), Integer(so).get_mpz_t(), two_r.get_mpz_t());
    mpz_invert(p_inv.get_mpz_t(), two_r.get_mpz_t(), Integer(so).get_mpz_t());
    auto Cn = cyclic(n);
    FagRingQ e(Cn);
    for (const auto& [elem, coeff] : combined.terms()) {
        Integer c = (elem[0] * af.s * s_inv + elem[1] * two_r * p_inv) % n;
        e.add_term({static_cast<int>(c.get_si())}, coeff);
    }
    cert.e = e;
    return cert;
}

bool has_integral_multiple(const FagRingQ& e, const Integer& n) {
    for (const auto& [elem, coeff] : e.terms()) {
        Rational scaled = coeff * Rational(n);
        scaled.canonicalize();
        if (scaled.get_den() != 1) return false;
    }
    return true;
}

} // namespace wreathlab

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wreathlab/rational.hpp"

namespace wreathlab {

// N-th cyclotomic polynomial, dense ascending integer coefficients.
std::vector<Integer> cyclotomic_polynomial(long N);

// Element of Q(zeta_N) as a coefficient vector of length phi(N) over the
// power basis 1, zeta, ..., zeta^(phi(N)-1), reduced modulo Phi_N.
// N = 1 represents a plain rational and unifies silently with any other
// modulus; distinct moduli > 1 must be embedded explicitly.
class CyclotomicNumber {
public:
    CyclotomicNumber() : n_(1), coeff_(1, Rational(0)) {}
    explicit CyclotomicNumber(long value) : n_(1), coeff_(1, Rational(value)) {}
    explicit CyclotomicNumber(const Rational& value) : n_(1), coeff_(1, value) {}

    // zeta_N^k, exponent taken mod N.
    static CyclotomicNumber root_power(long N, long k);
    static CyclotomicNumber zero_in(long N);

    long root_order() const { return n_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    CyclotomicNumber conj() const;  // zeta -> zeta^-1
    bool is_real() const { return conj() == *this; }
    CyclotomicNumber inverse() const;
    CyclotomicNumber embed_into(long M) const;  // requires root_order() | M

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber&, const CyclotomicNumber&);
    friend CyclotomicNumber operator-(const CyclotomicNumber&, const CyclotomicNumber&);
    friend CyclotomicNumber operator*(const CyclotomicNumber&, const CyclotomicNumber&);
    friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&);

    std::complex<double> to_complex() const;
    double to_double() const;  // real part; meaningful for real elements

    std::string to_string() const;

private:
    CyclotomicNumber(long n, std::vector<Rational> coeff)
        : n_(n), coeff_(std::move(coeff)) {}
    static std::pair<CyclotomicNumber, CyclotomicNumber> unify(const CyclotomicNumber&,
                                                               const CyclotomicNumber&);
    long n_;
    std::vector<Rational> coeff_;
};

// lambda_{m,n} = 2 cos(m pi / n) as an exact element of Q(zeta_{4n}).
// Requires n >= 2 and 1 <= m <= n-1.
CyclotomicNumber two_cos_exact(int m, int n);

// Unnormalized eigenvector of the 0/1 tridiagonal matrix A_n for the
// eigenvalue 2cos(m pi / n): entries v_j = sin(m j pi / n) in Q(zeta_{4n}).
struct SineEigenvector {
    int m = 0, n = 0;
    std::vector<CyclotomicNumber> entries;  // v_1 .. v_{n-1}
};

SineEigenvector sine_eigenvector(int m, int n);

// sum_j v_j(m) v_j(m2); equals (n/2) delta_{m,m2} and is always rational.
Rational sine_inner_product(int m, int m2, int n);

// Exact check that A_n v = 2cos(m pi/n) v entrywise.
bool check_tridiagonal_eigen_relation(int m, int n);

} // namespace wreathlab

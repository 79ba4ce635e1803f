#pragma once

#include <map>
#include <string>

#include "wreathlab/rational.hpp"

namespace wreathlab {

// Exact Laurent polynomial in one variable with rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);
    static LaurentPoly variable_power(int k, const Rational& coeff = Rational(1));

    const std::map<int, Rational>& coefficients() const { return coeff_; }
    Rational coefficient(int k) const;
    bool is_zero() const { return coeff_.empty(); }
    int min_degree() const;
    int max_degree() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff_ == b.coeff_; }

    std::string to_string(const std::string& var = "mu") const;

private:
    void set(int k, const Rational& v);
    std::map<int, Rational> coeff_;
};

// det(A_n + (mu + mu^-1) I_{n-1}) for the 0/1 tridiagonal matrix A_n, by the
// first-row expansion recurrence d_n = (mu + mu^-1) d_{n-1} - d_{n-2}.
// Requires n >= 2.
LaurentPoly tridiagonal_det(int n);

} // namespace wreathlab

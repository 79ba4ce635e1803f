#include "wreathlab/laurent.hpp"

#include "wreathlab/errors.hpp"

namespace wreathlab {

LaurentPoly::LaurentPoly(const Rational& constant) {
    set(0, constant);
}

LaurentPoly LaurentPoly::variable_power(int k, const Rational& coeff) {
    LaurentPoly p;
    p.set(k, coeff);
    return p;
}

Rational LaurentPoly::coefficient(int k) const {
    auto it = coeff_.find(k);
    return it == coeff_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_degree() const {
    if (coeff_.empty()) throw internal_error("degree of zero Laurent polynomial");
    return coeff_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (coeff_.empty()) throw internal_error("degree of zero Laurent polynomial");
    return coeff_.rbegin()->first;
}

void LaurentPoly::set(int k, const Rational& v) {
    if (v == 0)
        coeff_.erase(k);
    else
        coeff_[k] = v;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, v] : coeff_) out.coeff_.emplace(k, -v);
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [k, v] : b.coeff_) out.set(k, out.coefficient(k) + v);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ka, va] : a.coeff_)
        for (const auto& [kb, vb] : b.coeff_)
            out.set(ka + kb, out.coefficient(ka + kb) + va * vb);
    return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        const auto& [k, v] = *it;
        if (!out.empty()) out += v > 0 ? " + " : " - ";
        else if (v < 0) out += "-";
        Rational mag = abs(v);
        std::string coeff = to_fraction_string(mag);
        if (mag.get_den() == 1) coeff = mag.get_num().get_str();
        if (k == 0) {
            out += coeff;
        } else {
            if (mag != 1) out += coeff + "*";
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

LaurentPoly tridiagonal_det(int n) {
    if (n < 2) throw invalid_input("tridiagonal_det requires n >= 2");
    LaurentPoly s = LaurentPoly::variable_power(1) + LaurentPoly::variable_power(-1);
    LaurentPoly prev(Rational(1));  // d_1: empty matrix
    LaurentPoly cur = s;            // d_2
    for (int k = 3; k <= n; ++k) {
        LaurentPoly next = s * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace wreathlab

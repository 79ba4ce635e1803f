#include "wreathlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "wreathlab/errors.hpp"
#include "wreathlab/numtheory.hpp"

namespace wreathlab {

namespace {

using PolyQ = std::vector<Rational>;  // dense, ascending degree

void poly_trim(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

// In-place remainder of a modulo b (b nonzero). Returns quotient when asked.
void poly_divmod(PolyQ& a, const PolyQ& b, PolyQ* quotient = nullptr) {
    if (b.empty()) throw internal_error("polynomial division by zero");
    if (quotient) quotient->assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        if (quotient) (*quotient)[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
        if (a.empty()) break;
        if (a.size() >= b.size() && a.back() == 0) poly_trim(a);
    }
    if (quotient) poly_trim(*quotient);
}

// Extended gcd: returns (g, u) with u*a == g  (mod m), g constant when
// gcd(a, m) = 1. Used for field inversion modulo Phi_N.
std::pair<PolyQ, PolyQ> poly_half_ext_gcd(PolyQ a, PolyQ m) {
    PolyQ r0 = std::move(m), r1 = std::move(a);
    PolyQ u0 = {}, u1 = {Rational(1)};  // coefficients of `a`
    while (!r1.empty()) {
        PolyQ q;
        PolyQ rem = r0;
        poly_divmod(rem, r1, &q);
        PolyQ qu = poly_mul(q, u1);
        PolyQ next_u = u0;
        next_u.resize(std::max(next_u.size(), qu.size()), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) next_u[i] -= qu[i];
        poly_trim(next_u);
        u0 = std::move(u1);
        u1 = std::move(next_u);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return {r0, u0};
}

const PolyQ& cyclotomic_poly_q(long N) {
    static std::map<long, PolyQ> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto ints = cyclotomic_polynomial(N);
    PolyQ q(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) q[i] = Rational(ints[i]);
    return cache.emplace(N, std::move(q)).first->second;
}

long phi_long(long N) {
    return static_cast<long>(euler_phi(Integer(N)).get_si());
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(long N) {
    if (N < 1) throw invalid_input("cyclotomic index must be positive");
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    std::vector<Integer> result;
    if (N == 1) {
        result = {Integer(-1), Integer(1)};
    } else {
        // (x^N - 1) / prod_{d | N, d < N} Phi_d, all divisions exact.
        PolyQ num(static_cast<size_t>(N) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<size_t>(N)] = 1;
        for (long d = 1; d < N; ++d) {
            if (N % d != 0) continue;
            auto phi_d = cyclotomic_polynomial(d);
            PolyQ div(phi_d.size());
            for (size_t i = 0; i < phi_d.size(); ++i) div[i] = Rational(phi_d[i]);
            PolyQ quotient;
            poly_divmod(num, div, &quotient);
            if (!num.empty()) throw internal_error("cyclotomic recursion: non-exact division");
            num = std::move(quotient);
        }
        result.reserve(num.size());
        for (const auto& c : num) {
            if (c.get_den() != 1) throw internal_error("cyclotomic recursion: non-integer coefficient");
            result.push_back(c.get_num());
        }
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(N, std::move(result)).first->second;
}

CyclotomicNumber CyclotomicNumber::zero_in(long N) {
    if (N < 1) throw invalid_input("cyclotomic index must be positive");
    return CyclotomicNumber(N, std::vector<Rational>(static_cast<size_t>(phi_long(N)), Rational(0)));
}

CyclotomicNumber CyclotomicNumber::root_power(long N, long k) {
    if (N < 1) throw invalid_input("cyclotomic index must be positive");
    long deg = phi_long(N);
    k %= N;
    if (k < 0) k += N;
    PolyQ p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = 1;
    poly_divmod(p, cyclotomic_poly_q(N));
    p.resize(static_cast<size_t>(deg), Rational(0));
    return CyclotomicNumber(N, std::move(p));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw internal_error("cyclotomic element is not rational");
    return coeff_.empty() ? Rational(0) : coeff_[0];
}

std::pair<CyclotomicNumber, CyclotomicNumber> CyclotomicNumber::unify(
        const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.n_ == b.n_) return {a, b};
    if (a.n_ == 1) {
        CyclotomicNumber lifted = zero_in(b.n_);
        lifted.coeff_[0] = a.coeff_[0];
        return {lifted, b};
    }
    if (b.n_ == 1) {
        CyclotomicNumber lifted = zero_in(a.n_);
        lifted.coeff_[0] = b.coeff_[0];
        return {a, lifted};
    }
    throw invalid_input("cyclotomic moduli differ; embed explicitly");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeff_) c = -c;
    return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    auto [a, b] = CyclotomicNumber::unify(x, y);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
    return a;
}

CyclotomicNumber operator-(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    return x + (-y);
}

CyclotomicNumber operator*(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    // Fast path: scaling by a rational touches no modular reduction.
    if (x.n_ == 1) {
        CyclotomicNumber out = y;
        for (auto& c : out.coeff_) c *= x.coeff_[0];
        return out;
    }
    if (y.n_ == 1) return y * x;
    auto [a, b] = CyclotomicNumber::unify(x, y);
    PolyQ pa(a.coeff_.begin(), a.coeff_.end());
    PolyQ pb(b.coeff_.begin(), b.coeff_.end());
    poly_trim(pa);
    poly_trim(pb);
    PolyQ prod = poly_mul(pa, pb);
    poly_divmod(prod, cyclotomic_poly_q(a.n_));
    prod.resize(a.coeff_.size(), Rational(0));
    return CyclotomicNumber(a.n_, std::move(prod));
}

bool operator==(const CyclotomicNumber& x, const CyclotomicNumber& y) {
    if (x.n_ == y.n_) return x.coeff_ == y.coeff_;
    auto [a, b] = CyclotomicNumber::unify(x, y);
    return a.coeff_ == b.coeff_;
}

CyclotomicNumber CyclotomicNumber::conj() const {
    if (n_ == 1) return *this;
    CyclotomicNumber out = zero_in(n_);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        CyclotomicNumber term = root_power(n_, -static_cast<long>(i));
        for (size_t j = 0; j < out.coeff_.size(); ++j)
            out.coeff_[j] += coeff_[i] * term.coeff_[j];
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw invalid_input("inverse of zero");
    if (n_ == 1) {
        CyclotomicNumber out;
        out.coeff_[0] = 1 / coeff_[0];
        return out;
    }
    PolyQ a(coeff_.begin(), coeff_.end());
    poly_trim(a);
    auto [g, u] = poly_half_ext_gcd(a, cyclotomic_poly_q(n_));
    if (g.size() != 1) throw internal_error("element not invertible modulo cyclotomic polynomial");
    PolyQ inv = u;
    for (auto& c : inv) c /= g[0];
    poly_divmod(inv, cyclotomic_poly_q(n_));
    inv.resize(coeff_.size(), Rational(0));
    return CyclotomicNumber(n_, std::move(inv));
}

CyclotomicNumber CyclotomicNumber::embed_into(long M) const {
    if (M < 1 || M % n_ != 0) throw invalid_input("embedding target must be a multiple of the modulus");
    if (M == n_) return *this;
    long stride = M / n_;
    CyclotomicNumber out = zero_in(M);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        CyclotomicNumber term = root_power(M, stride * static_cast<long>(i));
        for (size_t j = 0; j < out.coeff_.size(); ++j)
            out.coeff_[j] += coeff_[i] * term.coeff_[j];
    }
    return out;
}

std::complex<double> CyclotomicNumber::to_complex() const {
    std::complex<double> out(0.0, 0.0);
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(n_);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        double c = coeff_[i].get_d();
        out += c * std::polar(1.0, theta * static_cast<double>(i));
    }
    return out;
}

double CyclotomicNumber::to_double() const { return to_complex().real(); }

std::string CyclotomicNumber::to_string() const {
    std::string out = "[N=" + std::to_string(n_) + ";";
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (i) out += ",";
        out += to_fraction_string(coeff_[i]);
    }
    return out + "]";
}

CyclotomicNumber two_cos_exact(int m, int n) {
    if (n < 2 || m < 1 || m > n - 1) throw invalid_input("two_cos_exact requires 1 <= m <= n-1");
    long N = 4L * n;
    return CyclotomicNumber::root_power(N, 2L * m) + CyclotomicNumber::root_power(N, -2L * m);
}

SineEigenvector sine_eigenvector(int m, int n) {
    if (n < 2 || m < 1 || m > n - 1) throw invalid_input("sine_eigenvector requires 1 <= m <= n-1");
    long N = 4L * n;
    SineEigenvector out;
    out.m = m;
    out.n = n;
    CyclotomicNumber half{Rational(1, 2)};
    CyclotomicNumber inv_i = CyclotomicNumber::root_power(N, -n);  // 1/i, since zeta^n = i
    for (int j = 1; j <= n - 1; ++j) {
        CyclotomicNumber num = CyclotomicNumber::root_power(N, 2L * m * j) -
                               CyclotomicNumber::root_power(N, -2L * m * j);
        out.entries.push_back(num * inv_i * half);
    }
    return out;
}

Rational sine_inner_product(int m, int m2, int n) {
    auto v = sine_eigenvector(m, n);
    auto w = sine_eigenvector(m2, n);
    CyclotomicNumber sum = CyclotomicNumber::zero_in(4L * n);
    for (int j = 0; j < n - 1; ++j) sum = sum + v.entries[j] * w.entries[j];
    if (!sum.is_rational()) throw internal_error("sine inner product did not reduce to a rational");
    return sum.rational_value();
}

bool check_tridiagonal_eigen_relation(int m, int n) {
    auto v = sine_eigenvector(m, n);
    CyclotomicNumber lambda = two_cos_exact(m, n);
    CyclotomicNumber zero = CyclotomicNumber::zero_in(4L * n);
    for (int k = 1; k <= n - 1; ++k) {
        CyclotomicNumber lhs = zero;
        if (k - 1 >= 1) lhs = lhs + v.entries[k - 2];
        if (k + 1 <= n - 1) lhs = lhs + v.entries[k];
        if (!(lhs == lambda * v.entries[k - 1])) return false;
    }
    return true;
}

} // namespace wreathlab

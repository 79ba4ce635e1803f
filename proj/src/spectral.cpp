#include "wreathlab/spectral.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "wreathlab/laurent.hpp"

namespace wreathlab {

namespace {

WreathRingQ shift_monomial(const std::shared_ptr<const WreathGroup>& W, long k) {
    return WreathRingQ::monomial(W, W->shift_power(k), Rational(1));
}

WreathRingC shift_monomial_c(const std::shared_ptr<const WreathGroup>& W, long k) {
    return WreathRingC::monomial(W, W->shift_power(k), CyclotomicNumber(1));
}

} // namespace

SpectralSetup make_setup(const std::shared_ptr<const FiniteAbelianGroup>& U,
                         const FagRingQ& base_projection) {
    if (!base_projection.is_projection())
        throw invalid_input("e must satisfy e = e* = e^2");
    if (base_projection.is_zero() || base_projection == FagRingQ::one(U))
        throw invalid_input("e must be a nontrivial projection (e != 0, 1)");
    SpectralSetup s;
    s.U = U;
    s.wreath = std::make_shared<const WreathGroup>(*U);
    s.base_projection = base_projection;
    s.e = embed_in_wreath(s.wreath, base_projection);
    Rational tr = base_projection.trace();
    if (tr <= 0) throw invalid_input("projection trace must be positive");
    s.W = 1 / tr;
    if (s.W <= 1) throw invalid_input("W = 1/trace(e) must exceed 1");
    s.T = s.e * shift_monomial(s.wreath, 1) + shift_monomial(s.wreath, -1) * s.e;
    return s;
}

SpectralSetup average_setup(const std::shared_ptr<const FiniteAbelianGroup>& U) {
    return make_setup(U, average_projection(U));
}

WreathRingQ projection_at(const SpectralSetup& s, long i) {
    return shift_monomial(s.wreath, -i) * s.e * shift_monomial(s.wreath, i);
}

WreathRingQ complement_at(const SpectralSetup& s, long i) {
    return WreathRingQ::one(s.wreath) - projection_at(s, i);
}

WreathRingQ interval_projection(const SpectralSetup& s, int n) {
    if (n < 2) throw invalid_input("interval projection requires n >= 2");
    WreathRingQ q = complement_at(s, 1);
    for (int i = 2; i <= n - 1; ++i) q = q * projection_at(s, i);
    return q * complement_at(s, n);
}

bool check_interval_orthogonality(const SpectralSetup& s, int n_max) {
    if (n_max < 2) throw invalid_input("n_max must be at least 2");
    std::vector<WreathRingQ> q;  // q[n] for 2 <= n <= n_max
    q.resize(static_cast<size_t>(n_max) + 1, WreathRingQ(s.wreath));
    for (int n = 2; n <= n_max; ++n) q[static_cast<size_t>(n)] = interval_projection(s, n);
    for (int n = 2; n <= n_max; ++n) {
        for (int np = 2; np <= n_max; ++np) {
            for (int m = 1; m < n; ++m) {
                for (int mp = 1; mp < np; ++mp) {
                    WreathRingQ lhs = q[static_cast<size_t>(np)] *
                                      shift_monomial(s.wreath, m - mp) *
                                      q[static_cast<size_t>(n)];
                    WreathRingQ rhs = (n == np && m == mp) ? q[static_cast<size_t>(n)]
                                                           : WreathRingQ(s.wreath);
                    if (!(lhs == rhs)) return false;
                }
            }
        }
    }
    return true;
}

bool check_shift_action(const SpectralSetup& s, int n) {
    if (n < 2) throw invalid_input("n must be at least 2");
    WreathRingQ q = interval_projection(s, n);
    for (int m = 1; m <= n - 1; ++m) {
        WreathRingQ lhs = s.T * shift_monomial(s.wreath, m) * q;
        WreathRingQ rhs(s.wreath);
        for (int i = 1; i <= n - 1; ++i) {
            if (std::abs(m - i) != 1) continue;
            rhs = rhs + shift_monomial(s.wreath, i) * q;
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

WreathRingC eigen_partial_isometry(const SpectralSetup& s, int m, int n) {
    auto v = sine_eigenvector(m, n);
    WreathRingC q = promote(interval_projection(s, n));
    WreathRingC r(s.wreath);
    for (int i = 1; i <= n - 1; ++i) {
        WreathRingC term = shift_monomial_c(s.wreath, i) * q;
        r = r + term.scaled(v.entries[static_cast<size_t>(i) - 1]);
    }
    return r;
}

WreathRingC eigenspace_projection(const SpectralSetup& s, int m, int n) {
    if (n < 2 || m < 1 || m > n - 1) throw invalid_input("eigenspace projection requires 1 <= m <= n-1");
    auto v = sine_eigenvector(m, n);
    WreathRingQ q = interval_projection(s, n);
    // p = (2/n) r r* expanded through q_n q_n = q_n:
    //   p = (2/n) sum_{i,j} v_i v_j t^i q_n t^-j.
    WreathRingC p(s.wreath);
    CyclotomicNumber two_over_n{frac(2, n)};
    for (int i = 1; i <= n - 1; ++i) {
        WreathRingQ left = shift_monomial(s.wreath, i) * q;
        for (int j = 1; j <= n - 1; ++j) {
            WreathRingQ shifted = left * shift_monomial(s.wreath, -j);
            CyclotomicNumber scale = v.entries[static_cast<size_t>(i) - 1] *
                                     v.entries[static_cast<size_t>(j) - 1] * two_over_n;
            p = p + promote(shifted).scaled(scale);
        }
    }
    return p;
}

bool check_eigen_orthogonality(const SpectralSetup& s, int n_max) {
    if (n_max < 2) throw invalid_input("n_max must be at least 2");
    std::vector<WreathRingQ> q(static_cast<size_t>(n_max) + 1, WreathRingQ(s.wreath));
    for (int n = 2; n <= n_max; ++n) q[static_cast<size_t>(n)] = interval_projection(s, n);
    for (int n = 2; n <= n_max; ++n) {
        for (int np = 2; np <= n_max; ++np) {
            long N = std::lcm(4L * n, 4L * np);
            // Middle products q_{n'} t^k q_n shared across all (m, m') pairs.
            std::map<int, WreathRingQ> middles;
            for (int k = 2 - np; k <= n - 2; ++k)
                middles.emplace(k, q[static_cast<size_t>(np)] * shift_monomial(s.wreath, k) *
                                       q[static_cast<size_t>(n)]);
            for (int m = 1; m < n; ++m) {
                auto v = sine_eigenvector(m, n);
                for (int mp = 1; mp < np; ++mp) {
                    auto vp = sine_eigenvector(mp, np);
                    WreathRingC lhs(s.wreath);
                    for (int j = 1; j < np; ++j) {
                        for (int i = 1; i < n; ++i) {
                            const auto& mid = middles.at(i - j);
                            if (mid.is_zero()) continue;
                            CyclotomicNumber scale =
                                vp.entries[static_cast<size_t>(j) - 1].embed_into(N) *
                                v.entries[static_cast<size_t>(i) - 1].embed_into(N);
                            lhs = lhs + promote(mid).scaled(scale);
                        }
                    }
                    WreathRingC rhs(s.wreath);
                    if (n == np && m == mp)
                        rhs = promote(q[static_cast<size_t>(n)])
                                  .scaled(CyclotomicNumber(frac(n, 2)));
                    if (!(lhs == rhs)) return false;
                }
            }
        }
    }
    return true;
}

Rational atom_mass(const Rational& W, int n) {
    if (W <= 1) throw invalid_input("W must exceed 1");
    if (n < 2) throw invalid_input("atom index n must be at least 2");
    Rational wn = rational_pow(W, static_cast<unsigned long>(n));
    return (W - 1) * (W - 1) / (wn - 1);
}

AtomLookup recognize_atom(const Rational& W, const Rational& mu, int n_max) {
    if (W <= 1) throw invalid_input("W must exceed 1");
    AtomLookup out;
    const double target = mu.get_d();
    for (int n = 2; n <= n_max; ++n) {
        for (int m = 1; m <= n - 1; ++m) {
            if (std::gcd(m, n) != 1) continue;
            double lambda = 2.0 * std::cos(std::numbers::pi * m / n);
            if (std::abs(lambda - target) < 1e-9) {
                out.recognized = true;
                out.m = m;
                out.n = n;
                out.mass = atom_mass(W, n);
                return out;
            }
        }
    }
    out.mass = Rational(0);
    return out;
}

Rational mass_partial_sum(const Rational& W, int N) {
    if (W <= 1) throw invalid_input("W must exceed 1");
    if (N < 2) throw invalid_input("N must be at least 2");
    Rational sum(0);
    Rational wpow = W * W;
    for (int n = 2; n <= N; ++n) {
        sum += Rational(n - 1) * (W - 1) * (W - 1) / wpow;
        wpow *= W;
    }
    return sum;
}

Rational mass_tail(const Rational& W, int N) {
    if (W <= 1) throw invalid_input("W must exceed 1");
    if (N < 2) throw invalid_input("N must be at least 2");
    // sum_{n>N} (n-1)(W-1)^2 W^-n = (W-1)^2 x^(N+1) (N - (N-1)x) / (1-x)^2
    // with x = 1/W.
    Rational x = 1 / W;
    Rational xn = rational_pow(x, static_cast<unsigned long>(N) + 1);
    return (W - 1) * (W - 1) * xn * (N - (N - 1) * x) / ((1 - x) * (1 - x));
}

bool check_determinant_identity(int n_max) {
    if (n_max < 2) throw invalid_input("n_max must be at least 2");
    LaurentPoly mu = LaurentPoly::variable_power(1);
    LaurentPoly mu_inv = LaurentPoly::variable_power(-1);
    for (int n = 2; n <= n_max; ++n) {
        LaurentPoly lhs = tridiagonal_det(n) * (mu - mu_inv);
        LaurentPoly rhs = LaurentPoly::variable_power(n) - LaurentPoly::variable_power(-n);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::vector<SpectralAtom> atoms_up_to(const Rational& W, int n_max) {
    std::vector<SpectralAtom> out;
    for (int n = 2; n <= n_max; ++n)
        for (int m = 1; m <= n - 1; ++m)
            if (std::gcd(m, n) == 1)
                out.push_back({m, n, two_cos_exact(m, n), atom_mass(W, n)});
    return out;
}

} // namespace wreathlab

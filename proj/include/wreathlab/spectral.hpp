#pragma once

#include <optional>
#include <vector>

#include "wreathlab/groupring.hpp"

namespace wreathlab {

// A wreath product U wr Z together with a nontrivial projection e in Q[U],
// the derived constant W = 1/trace(e) > 1, and the self-adjoint element
// T = e t + t^-1 e.
struct SpectralSetup {
    std::shared_ptr<const FiniteAbelianGroup> U;
    std::shared_ptr<const WreathGroup> wreath;
    FagRingQ base_projection;  // e over U
    WreathRingQ e;             // e embedded at lamp index 0
    WreathRingQ T;
    Rational W;
};

// Validates e = e* = e^2 and e not in {0, 1}; throws invalid_input otherwise.
SpectralSetup make_setup(const std::shared_ptr<const FiniteAbelianGroup>& U,
                         const FagRingQ& base_projection);
SpectralSetup average_setup(const std::shared_ptr<const FiniteAbelianGroup>& U);

// e conjugated to lamp index i, and its complement.
WreathRingQ projection_at(const SpectralSetup& s, long i);   // e_i = t^-i e t^i
WreathRingQ complement_at(const SpectralSetup& s, long i);   // f_i = 1 - e_i

// The interval projection q_n = f_1 e_2 ... e_{n-1} f_n; its trace is
// (W-1)^2 / W^n. Requires n >= 2.
WreathRingQ interval_projection(const SpectralSetup& s, int n);

// Exact check of q_{n'} t^{-m'} t^m q_n = delta delta q_n over the stated
// index ranges.
bool check_interval_orthogonality(const SpectralSetup& s, int n_max);

// Exact check that T (t^m q_n) = sum_i alpha_{m,i} t^i q_n for 1 <= m <= n-1.
bool check_shift_action(const SpectralSetup& s, int n);

// The eigenprojection p_{m,n} = (2/n) r r* built from the unnormalized sine
// eigenvector; coefficients live in Q(zeta_{4n}).
WreathRingC eigenspace_projection(const SpectralSetup& s, int m, int n);

// The partial isometry r_{m,n} = sum_i v_i t^i q_n (unnormalized).
WreathRingC eigen_partial_isometry(const SpectralSetup& s, int m, int n);

// Exact check of r*_{m',n'} r_{m,n} = (n/2) delta delta q_n for all index
// pairs with n, n' <= n_max.
bool check_eigen_orthogonality(const SpectralSetup& s, int n_max);

// Mass (W-1)^2 / (W^n - 1) of the spectral atom at 2cos(m pi/n) with
// gcd(m,n) = 1; requires W > 1 and n >= 2.
Rational atom_mass(const Rational& W, int n);

struct AtomLookup {
    bool recognized = false;
    int m = 0, n = 0;
    Rational mass;  // zero when not recognized
};

// Recognizes a decimal mu as 2cos(m pi / n) for some coprime (m, n) with
// n <= n_max within tolerance 1e-9; fails safe with recognized = false.
AtomLookup recognize_atom(const Rational& W, const Rational& mu, int n_max = 64);

// Partial sums of the total mass: sum_{n=2..N} (n-1)(W-1)^2 / W^n, plus the
// exact closed-form tail with partial + tail = 1.
Rational mass_partial_sum(const Rational& W, int N);
Rational mass_tail(const Rational& W, int N);

// Exact Laurent identity det(A_n + (mu+mu^-1) I) (mu - mu^-1) = mu^n - mu^-n
// for all 2 <= n <= n_max.
bool check_determinant_identity(int n_max);

struct SpectralAtom {
    int m = 0, n = 0;
    CyclotomicNumber lambda;
    Rational mass;
};

// All atoms with n <= n_max, m coprime to n.
std::vector<SpectralAtom> atoms_up_to(const Rational& W, int n_max);

} // namespace wreathlab

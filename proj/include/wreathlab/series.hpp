#pragma once

#include <vector>

#include "wreathlab/numtheory.hpp"
#include "wreathlab/rational.hpp"

namespace wreathlab {

// Truncated bivariate power series with exact rational coefficients on the
// index box 1..K x 1..K.
class BivariateSeries {
public:
    explicit BivariateSeries(int order);
    int order() const { return order_; }
    const Rational& at(int i, int j) const;
    void set(int i, int j, Rational value);

private:
    size_t index(int i, int j) const;
    int order_;
    std::vector<Rational> coeff_;
};

// Coefficients gcd(i, j); throws budget_exceeded for K outside 1..500.
BivariateSeries gcd_series(int K);

// For all n <= K: gcd_sum(n) - sum_{i=1}^{n-1} gcd(i, n-i) == n.
bool check_diagonal_identity(int K);

struct DominanceEntry {
    long offset;          // j with 1 <= |j| <= N
    Integer a_value;      // gcd_sum(m + j)
    Rational ratio;       // a(m+j) / a(m)
    bool dominated;       // a(m) > N * a(m+j)
    Factorization factorization;  // of m + j
};

struct DominanceCheck {
    Integer m;
    int N = 0;
    Integer a_m;
    std::vector<DominanceEntry> entries;
    bool all_dominated = false;
    Rational max_ratio;
};

// Evaluates a(m) > N a(m+j) for every 1 <= |j| <= N with exact ratios.
DominanceCheck dominance_check(const Integer& m, int N, const FactorOptions& opt = {});

struct DominanceWitness {
    long Q = 0;
    int N = 0;
    Integer m_Q;  // prod_{i<=Q} p_i * prod_{i<=N} p_i^N
    DominanceCheck check;
    // Per entry: count of prime factors of m+j (with multiplicity) that are
    // >= p_Q, and the total prime factor count.
    std::vector<int> tail_factor_counts;
    std::vector<int> omega;
};

DominanceWitness dominance_witness(long Q, int N, const FactorOptions& opt = {});

} // namespace wreathlab

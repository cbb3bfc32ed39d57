#pragma once

#include <vector>

#include "qcomb/rational.hpp"
#include "qcomb/series.hpp"

namespace qcomb::levels {

// Number of level sequences of total n: compositions n = n_1 + ... + n_k
// with n_1 = 1 and n_j <= 2 n_{j-1}. DP over (remaining total, last entry).
Int count_dp(long n);

// Generating state by height: coefficient of q^a u^b counts sequences with
// total a, height exactly `height`, last entry b.
struct SliceState {
    BiSeries f;
    int height;
};

// F_1 = u q. Equal truncation orders make the slice step exact: a dropped
// u-power 2b > order_u always carries q-power a + 2b > order_q as well.
SliceState slice_initial(int order_q, int order_u);

// Adding a new slice: F_{k+1} = uq/(1-uq) (F_k(q,1) - F_k(q, u^2 q^2)).
SliceState slice_iterate(const SliceState& s);

// counts[n] = sum over heights k of [q^n] F_k(q,1), n = 0..order; equals the
// level-sequence counts (heights beyond n cannot contribute at total n).
std::vector<Int> slice_counts(int order);

// F(q,1) as the explicit quotient of two alternating q-series: j-th terms
// carry q^{2^{j+1}-j-2} over the products (1-q)(1-q^3)...(1-q^{2^{j-1}-1})
// (numerator) and ...(1-q^{2^j-1}) (denominator); exact series division.
Series gf_closed(int order);

// The denominator of gf_closed as a numeric function of real q in (0, 0.85],
// truncated once the doubly-exponential terms certify tol.
double gf_denominator_at(double q, double tol);

// Root of the denominator in (0.3, 0.7) by bisection to tol. Throws if the
// endpoints fail to bracket a sign change.
double dominant_pole(double tol);

struct GrowthFit {
    double rate;       // H_n / H_{n-1}
    double amplitude;  // H_n pole^n
    double pole;
};
GrowthFit growth_fit(long n, double tol);

}  // namespace qcomb::levels

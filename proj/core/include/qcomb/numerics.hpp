#pragma once

#include <vector>

#include "qcomb/rational.hpp"

namespace qcomb {

// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n, negative n rejected.
Int binomial(long n, long k);

Int factorial(long n);

// Number of plane binary trees with n internal nodes.
Int catalan(long n);

// Generalized harmonic number H_n^(j) = sum_{i<=n} i^-j, exact. Requires j >= 1.
Rat harmonic(long n, int j = 1);

// Q_n = prod_{k=1..n} (1 - 2^-k), exact.
Rat qpoch(int n);
// Q_0 .. Q_n in one sweep.
std::vector<Rat> qpoch_table(int n);

// Q_infinity = prod_{k>=1} (1 - 2^-k), within tol. The partial product P_K
// differs from the limit by at most 2^{1-K}, which certifies the stop.
double q_infinity(double tol);

// prod_{k>=1} (1 - x 2^-k) for 0 <= x <= 1, within tol.
double q_product(double x, double tol);

// alpha = sum_{k>=1} 1/(2^k - 1), within tol (tail < 2^{1-K}).
double alpha_constant(double tol);

// Euler's constant via the Euler-Maclaurin expansion of H_N - ln N; the
// remainder is bounded by the first omitted term. Supports tol >= 1e-13.
double euler_gamma(double tol);

// Riemann zeta for real s > 1 through the alternating eta series,
// zeta(s) = eta(s) / (1 - 2^{1-s}); the alternating tail certifies tol.
double zeta(double s, double tol);

}  // namespace qcomb

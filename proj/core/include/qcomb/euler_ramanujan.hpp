#pragma once

#include "qcomb/rational.hpp"
#include "qcomb/series.hpp"

namespace qcomb::sums {

// S_n(m) = sum_{k=1..n} C(n,k) (-1)^{k-1} / k^m, exact.
Rat alt_binom_sum(long n, long m);

// [z^m] exp( sum_{j>=1} H_n^{(j)} z^j / j ); equals alt_binom_sum(n, m).
Rat harmonic_exp_extract(long n, long m);

// S_{p,q} = sum_{n>=1} H_n^{(p)} / n^q for p >= 1, q >= 2, to certified
// absolute error tol (partial sum plus integral-test tail brackets).
double euler_sum(long p, long q, double tol);

}  // namespace qcomb::sums

namespace qcomb::ramanujan {

// Q(n) = 1 + (n-1)/n + (n-1)(n-2)/n^2 + ...  (finite sum, exact).
Rat ramanujan_Q(long n);

// R(n) = 1 + n/(n+1) + n^2/((n+1)(n+2)) + ... to certified error tol,
// positive terms with a geometric ratio bound for the tail.
double ramanujan_R(long n, double tol);

// n! e^n / n^n, the exact value of Q(n) + R(n), via lgamma.
double q_plus_r_reference(long n);

struct ThetaK {
    double theta;  // D = R(n) - Q(n), which tends to 2/3
    double k;      // solves D = 2/3 + 8/(135 (n + k))
};
ThetaK theta_k(long n, double tol);

// y(z) solving y = z e^y, truncated; coefficient of z^n is n^{n-1}/n!.
Series tree_function(int order);

// |Q(n) - sqrt(pi n / 2) + 1/3|, the next-order asymptotic deviation.
double q_asymptotic_deviation(long n);

// Gamma(x) for real x > 0: Stirling-de Moivre series at a shifted argument
// with the remainder bounded by the first omitted term, then downshifted.
double gamma_real(double x);

struct MasterTheoremReport {
    double integral;  // adaptive quadrature of x^{s-1} e^{-x} over (0, inf)
    double gamma;     // pi / (sin(pi s) Gamma(1-s))
    double diff;
    double tol;
    bool pass;
};
MasterTheoremReport master_theorem_check(double s, double tol);

}  // namespace qcomb::ramanujan

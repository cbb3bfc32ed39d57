#pragma once

#include <map>

#include "qcomb/rational.hpp"

namespace qcomb::perron {

// Finitely supported coefficient sequence k -> lambda_k, k >= 1. The
// associated Dirichlet polynomial sum lambda_k k^{-s} is entire.
using Coeffs = std::map<long, Rat>;

// (1/m!) sum_{1 <= k < n} lambda_k (1 - k/n)^m, plus lambda_n / 2 when
// m = 0; exact. Only m = 0 and m = 1 are supported.
Rat perron_lhs(const Coeffs& lam, long n, int m);

struct PerronResult {
    double value;        // (1/pi) Integral_0^T Re F(c+it) dt by Simpson rule
    double trunc_est;    // estimated size of the discarded tail beyond T
    double suggested_T;  // height at which the estimate would meet tol
    bool certified;      // trunc_est <= tol
};

// Numeric right-hand side of the Perron formula: the line integral of
// (sum_k lambda_k k^{-s}) n^s / (s(s+1)...(s+m)) over [c-iT, c+iT], folded
// into twice the real part on [0, T]. The tail beyond T is estimated per
// term by integration by parts: O(1/T) for m=0 and O(1/T^2) for m=1.
PerronResult perron_rhs_numeric(const Coeffs& lam, long n, int m, double c,
                                double T, double tol);

}  // namespace qcomb::perron

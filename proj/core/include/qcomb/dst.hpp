#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qcomb/rational.hpp"
#include "qcomb/rng.hpp"
#include "qcomb/series.hpp"

namespace qcomb::dst {

// Digital search tree over bit keys. The first key occupies the root; every
// later key walks from the root by its successive bits (0 = left, 1 = right)
// and settles in the first vacant spot. Shape depends on insertion order.
class DSTree {
  public:
    // Key given as a string of '0'/'1'. Throws if the bits run out before a
    // vacancy is found.
    void insert(const std::string& key);

    // Key drawn lazily from a fair-bit stream; cannot exhaust.
    void insert(BitStream& bits);

    long size() const { return size_; }

    // Number of childless nodes; 0 for the empty tree.
    long count_endnodes() const;

  private:
    struct Node {
        std::unique_ptr<Node> child[2];
    };
    template <class NextBit>
    void place(NextBit next_bit);
    std::unique_ptr<Node> root_;
    long size_ = 0;
};

// F_n(z) = sum_k P(tree of size n has k endnodes) z^k, exact, via
// F_{n+1} = 2^-n sum_k C(n,k) F_k F_{n-k}, F_0 = 1, F_1 = z.
// The polynomial is returned as a degree-n truncated series.
Series endnode_poly(long n, long cap = 64);

// Mean endnode count ell_n by the direct binomial recurrence
// ell_{n+1} = 2^{1-n} sum_k C(n,k) ell_k, ell_0 = 0, ell_1 = 1.
Rat ell_recurrence(long n);

// Poisson-transformed mean: iteration of
// ellhat_{n+1} = (-1)^n - (1 - 2^{1-n}) ellhat_n from ellhat_0 = 0 ...
Rat ell_hat_iter(long n);
// ... and its closed form (-1)^{n+1} Q_{n-2} (1/Q_0 + ... + 1/Q_{n-2}).
Rat ell_hat_closed(long n);

// Inverse Poisson transform: ell_n = sum_k C(n,k) ellhat_k.
Rat ell_from_hat(long n);

// R_m = Q_m (1/Q_0 + ... + 1/Q_m), exact; R_0 = 1, R_m = (1-2^-m) R_{m-1} + 1.
Rat r_exact(long m);

// ell_n = n - sum_{k=2..n} C(n,k) (-1)^k R_{k-2}, exact. The terms carry the
// common denominator 2^{(n-2)(n-1)/2} and are accumulated as one integer, so
// the huge alternating cancellation costs nothing in accuracy.
Rat ell_closed(long n);

// R*(z) as the defining series
//   sum_{j>=0} (z+1+j-alpha) 2^{-z-1-j} / prod_{i=0..j} (1 - 2^{-z-1-i}),
// valid for any z except the negative integers, where a denominator factor
// vanishes. z = -1 is special-cased as the two-sided analytic limit (accuracy
// there is a few 1e-12 regardless of tol); other negative integers throw.
double r_star_product_form(double z, double tol);

// R*(z) by partial fractions,
//   (1/Q_inf) sum_{j>=1} (-1)^{j-1} 2^{-C(j,2)} / Q_{j-1} (z+j)/(2^{z+j}-1).
// Defined for z > -2 except that z = -1 takes the j = 1 factor in the limit
// (z+1)/(2^{z+1}-1) -> 1/log 2.
double r_star_partial_fraction(double z, double tol);

// alpha + 1 - R*(-1) = 0.372048..., the linear growth rate of ell_n.
double endnode_constant(double tol);

// The two q-series identities behind the partial fraction form, evaluated
// numerically: sum 2^-l / Q_l = 1/Q_inf, sum l 2^-l / Q_l = alpha/Q_inf, and
// the generic Euler identity sum t^n/(q;q)_n = 1/(t;q)_inf at t=1/3, q=1/2.
struct EulerIdentityReport {
    double lhs_unit, rhs_unit;    // sum 2^-l/Q_l vs 1/Q_inf
    double lhs_alpha, rhs_alpha;  // sum l 2^-l/Q_l vs alpha/Q_inf
    double lhs_third, rhs_third;  // t = 1/3 instance
};
EulerIdentityReport euler_identity_checks(double tol);

// Endnode-count histogram over independent trials: hist[e] counts trials
// whose size-n tree (keys = independent fair-bit streams) has e endnodes.
// Trial t draws from (seed, t), so any thread partition gives the same result.
std::vector<std::uint64_t> simulate_dst(long n, long trials, std::uint64_t seed,
                                        int threads = 1);

}  // namespace qcomb::dst

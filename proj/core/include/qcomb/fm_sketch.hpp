#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcomb/rational.hpp"
#include "qcomb/rng.hpp"

namespace qcomb::fm {

// Occupancy sketch for distinct counting: a bitmap over urns 0..width-1.
// Inserting a geometric draw g (urn g hit with probability 2^-(g+1)) sets a
// bit; the observable R is the index of the first empty urn. Inserts only
// ever set bits, so R is monotone over inserts and duplicates are free.
class UrnSketch {
  public:
    explicit UrnSketch(int width = 64);

    int width() const { return width_; }
    bool overflowed() const { return overflow_; }

    // Sets bit g. Draws at or beyond the width saturate into the last urn
    // and are remembered in the overflow flag.
    void insert(int g);

    // min { i : urn i empty }, which is width if every urn is occupied.
    int observe_R() const;

    // Bitwise OR; the result is the sketch of the union of the two streams.
    void merge(const UrnSketch& other);

    // Bitmap as text, least-significant first: character i is urn i.
    std::string bitmap() const;

  private:
    int width_;
    bool overflow_;
    std::vector<std::uint64_t> words_;
};

// Binary digit sum and the Thue-Morse sign (-1)^nu(j).
int nu(std::uint64_t j);
int tm_sign(std::uint64_t j);

// P(urns 0..k-1 all occupied after n geometric insertions), exactly.
// Computed from signed power sums T_i = sum_{j<2^k} (-1)^nu(j) j^i via
//   q = sum_i C(n,i) (-2^-k)^i T_i,
// which reproduces the alternating sum over j without 2^k-term blowup.
Rat q_exact(long n, int k);

// q_exact for every n = 0..nmax at fixed k, sharing one power-sum table.
std::vector<Rat> q_exact_row(long nmax, int k);

// The defining alternating sum, evaluated verbatim with 2^k + 1 terms:
//   sum_{j=0}^{2^k} (-1)^nu(j) (1 - j/2^k)^n.
// Exponential in k; accepted for k <= 20 as an independent route.
Rat q_direct(long n, int k);

// Brute force over all (k+1)^n assignments of balls to urns 0..k-1 or the
// tail. Exact; restricted to n <= 8, k <= 4.
Rat q_oracle(long n, int k);

// Third route: exact conditioning DP on the number m of balls in urn 0,
//   q(n,k) = sum_{m=1..n} C(n,m) 2^-n q(n-m, k-1),
// since the remaining balls recurse into the urns shifted by one.
// Returns the full table t[k][n] for k = 0..kmax, n = 0..nmax.
std::vector<std::vector<Rat>> q_dp_table(long nmax, int kmax);

// Exact mean of R after n insertions: sum_{k=1..n} q_exact(n,k).
// Every summand beyond k = n is identically zero. Practical for n <= 128.
Rat mean_R_exact(long n);

// mean(R_n) = sum_{k>=1} q(n,k) as a double. Small n goes through the exact
// rationals; large n uses a windowed occupancy DP on
//   q(n,k) = sum_m C(n,m) 2^-n q(n-m, k-1)
// (m balls in urn 0, the rest recurse into urns shifted by one), keeping
// binomial weights within 10 standard deviations of n/2. The k-sum stops
// once k exceeds log2(n) + 10 and q < tol/1024, or at the hard cutoff
// k = ceil(log2 n) + 40 where the tail is below n 2^-k <= 2^-40.
double mean_R(long n, double tol);

// psi(x) = prod_{j>=0} (1 - e^{-x 2^j}), two routes.
double psi_product(double x, double tol);
// The equivalent signed series sum_{j>=0} (-1)^nu(j) e^{-jx}.
double psi_series(double x, double tol);

// N(s) = sum_{j>=1} (-1)^nu(j) j^-s.
// Direct summation (s > 1), stopped when the paired-term tail bound
// 2^{-s-1} M^{-s} certifies tol.
double dirichlet_N_direct(double s, double tol);
// Grouped four at a time as
//   -1 - 2^-s + 3^-s + sum_j (-1)^nu(j) (4j)^-s
//        [1 - (1+1/(4j))^-s - (1+2/(4j))^-s + (1+3/(4j))^-s],
// whose terms shrink like j^-s-2; valid for s > 0.
double dirichlet_N_accel(double s, double tol);

// Partial product prod_{p=1..terms} [(4p+1)(4p+2) / ((4p)(4p+3))]^{tm_sign(p)}.
Rat fm_product_exact(long terms);  // terms <= 64
double fm_product(long terms);

// Histogram of R over independent trials of n insertions into a width-64
// sketch. hist[r] counts trials with observe_R() == r. Trial t draws from
// the stream derived from (seed, t), so the histogram does not depend on
// how the trial range is partitioned over threads.
std::vector<std::uint64_t> simulate_fm(long n, long trials, std::uint64_t seed,
                                       int threads = 1);

}  // namespace qcomb::fm

#pragma once

#include <cstdint>
#include <vector>

#include "qcomb/rational.hpp"
#include "qcomb/rng.hpp"
#include "qcomb/series.hpp"

namespace qcomb::morris {

// Probabilistic counter: the level starts at 1 and, on each observed event,
// advances by one with probability 2^-level. The advance is decided by
// drawing exactly `level` fair bits and moving iff all are zero, so the
// probability is exact and no floating point enters the simulation.
class MorrisCounter {
  public:
    explicit MorrisCounter(std::uint64_t seed) : bits_(seed) {}

    int level() const { return level_; }

    void observe() {
        if (bits_.all_zero(level_)) ++level_;
    }

  private:
    int level_ = 1;
    BitStream bits_;
};

// Exact level distribution after n observations. Returns p indexed by level,
// p[l] = P(level = l), valid entries l = 1..n+1 (p[0] stays zero).
std::vector<Rat> pmf_dp(long n);

// The same probability from the partial-fraction closed form
//   p(n,l) = sum_{i=0}^{l-1} (-1)^i 2^{-C(i,2)} / (Q_i Q_{l-1-i}) (1-2^{-(l-i)})^n.
Rat pmf_closed(long n, int level);

// Ordinary generating function of P(level after n observations = level):
//   z^{level-1} q^{C(level,2)} / prod_{i=1..level} (1 - (1-q^i) z),
// truncated at `order`. The counter's advance probabilities fix q = 1/2;
// the parameter exists because the product form is valid for general q.
Series state_gf(int level, int order, const Rat& q = Rat(1, 2));

// Exact mean level after n observations, as the alternating binomial sum
//   1 - sum_{k=1..n} (-1)^k C(n,k) 2^-k Q_{k-1},
// evaluated over a common power-of-two denominator. Floating point is not
// usable here: the terms cancel massively for large n.
Rat mean_rice(long n);

// Bivariate generating function F(z,u) = sum p(n,l) z^n u^l, obtained by
// iterating F = u/(1-z) + z(u-1)/(1-z) F(z, u/2) until the truncated
// coefficients stop changing. Throws if no fixed point is reached (cannot
// happen: each pass through the equation settles one more z-row).
BiSeries bivariate_iteration(int order_z, int order_u);

// Level histogram over independent seeded counters, each fed n observations.
// hist[l] counts counters finishing at level l. Every trial derives its own
// bit stream from (seed, trial index), so any partition of the trial range
// over threads produces the identical histogram.
std::vector<std::uint64_t> simulate(long n, long trials, std::uint64_t seed,
                                    int threads = 1);

}  // namespace qcomb::morris

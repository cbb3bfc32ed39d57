#pragma once

#include <cstdint>
#include <vector>

#include "qcomb/rational.hpp"

namespace qcomb::digits {

// Number of trailing zero bits of k >= 1.
int v2(std::uint64_t k);

// Binary digit sum of n.
int s2(std::uint64_t n);

// sum_{m < n} S_2(m), exact.
Int delange_sum(std::uint64_t n);

// (delange_sum(n) - (n/2) log2 n) / n, the bounded fluctuation left after
// removing the main term.
double delange_F(std::uint64_t n);

// +1 if k = 2^i (4j+1), -1 if k = 2^i (4j+3).
int theta_sign(std::uint64_t k);

// Gray-code bits of n from the floor formula
// a_k = floor(n/2^{k+2} + 3/4) - floor(n/2^{k+2} + 1/4); index k = bit k.
std::vector<int> gray_bits(std::uint64_t n);

// Digit sum of the Gray code, summing the floor-formula bits.
long s_gray(std::uint64_t n);

struct TelescopeReport {
    bool pass;
    std::uint64_t first_fail;  // 0 when pass
};

// Checks S_GR(n) = sum_{m<=n} theta(m) and S_GR(n) - S_GR(n-1) = theta(n)
// for all n <= N.
TelescopeReport gray_telescope_check(std::uint64_t N);

// sum_{k=1..n} theta(k) C(2n, n-k), exact.
Int merge_sum(long n);

}  // namespace qcomb::digits

#include "qcomb/digits.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qcomb/numerics.hpp"

namespace qcomb::digits {

int v2(std::uint64_t k) {
    if (k == 0) throw std::domain_error("v2: k must be positive");
    return std::countr_zero(k);
}

int s2(std::uint64_t n) { return std::popcount(n); }

Int delange_sum(std::uint64_t n) {
    if (n == 0) throw std::domain_error("delange_sum: n must be positive");
    std::uint64_t acc = 0;
    for (std::uint64_t m = 0; m < n; ++m) acc += static_cast<unsigned>(std::popcount(m));
    return Int(static_cast<unsigned long>(acc));
}

double delange_F(std::uint64_t n) {
    const double sum = delange_sum(n).get_d();
    const double dn = static_cast<double>(n);
    return (sum - 0.5 * dn * std::log2(dn)) / dn;
}

int theta_sign(std::uint64_t k) {
    if (k == 0) throw std::domain_error("theta_sign: k must be positive");
    k >>= std::countr_zero(k);
    return (k & 3u) == 1u ? 1 : -1;
}

std::vector<int> gray_bits(std::uint64_t n) {
    if (n >> 56) throw std::domain_error("gray_bits: n too large");
    const int width = std::bit_width(n);
    std::vector<int> bits(width);
    for (int k = 0; k < width; ++k) {
        // floor(n/2^{k+2} + 3/4) - floor(n/2^{k+2} + 1/4), scaled by 2^{k+4}
        const std::uint64_t p = std::uint64_t{1} << (k + 2);
        const std::uint64_t hi = (4 * n + 3 * p) >> (k + 4);
        const std::uint64_t lo = (4 * n + p) >> (k + 4);
        bits[k] = static_cast<int>(hi - lo);
    }
    return bits;
}

long s_gray(std::uint64_t n) {
    long s = 0;
    for (int b : gray_bits(n)) s += b;
    return s;
}

TelescopeReport gray_telescope_check(std::uint64_t N) {
    if (N == 0) throw std::domain_error("gray_telescope_check: N must be positive");
    long theta_acc = 0;
    long prev = 0;  // S_GR(0)
    for (std::uint64_t n = 1; n <= N; ++n) {
        const int th = theta_sign(n);
        theta_acc += th;
        const long sg = s_gray(n);
        if (sg != theta_acc || sg - prev != th) return {false, n};
        prev = sg;
    }
    return {true, 0};
}

Int merge_sum(long n) {
    if (n < 1) throw std::domain_error("merge_sum: n must be positive");
    Int c = binomial(2 * n, n - 1);
    Int acc(0);
    for (long k = 1; k <= n; ++k) {
        if (theta_sign(static_cast<std::uint64_t>(k)) > 0)
            acc += c;
        else
            acc -= c;
        if (k < n) {
            // C(2n, n-k-1) = C(2n, n-k) (n-k) / (n+k+1)
            c *= (n - k);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                            static_cast<unsigned long>(n + k + 1));
        }
    }
    return acc;
}

}  // namespace qcomb::digits

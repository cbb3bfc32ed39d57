#include "qcomb/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace qcomb {

Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative n");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan: negative n");
    return binomial(2 * n, n) / Int(n + 1);
}

Rat harmonic(long n, int j) {
    if (n < 0) throw std::invalid_argument("harmonic: negative n");
    if (j < 1) throw std::invalid_argument("harmonic: order j must be >= 1");
    Rat h;
    for (long i = 1; i <= n; ++i) {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
        h += Rat(Int(1), d);
    }
    return h;
}

Rat qpoch(int n) {
    if (n < 0) throw std::invalid_argument("qpoch: negative n");
    // numerator prod (2^i - 1), denominator 2^{n(n+1)/2}
    Int num(1);
    for (int i = 1; i <= n; ++i) num *= pow2(i) - 1;
    return Rat(num, pow2(static_cast<unsigned long>(n) * (n + 1) / 2));
}

std::vector<Rat> qpoch_table(int n) {
    if (n < 0) throw std::invalid_argument("qpoch_table: negative n");
    std::vector<Rat> q(n + 1);
    q[0] = Rat(1);
    for (int i = 1; i <= n; ++i) q[i] = q[i - 1] * Rat(pow2(i) - 1, pow2(i));
    return q;
}

double q_infinity(double tol) {
    if (tol <= 0) throw std::invalid_argument("q_infinity: tol must be positive");
    double p = 1.0;
    for (int k = 1; k < 4096; ++k) {
        p *= 1.0 - std::ldexp(1.0, -k);
        if (std::ldexp(2.0, -k) < tol) return p;
    }
    throw std::runtime_error("q_infinity: tolerance unreachable");
}

double q_product(double x, double tol) {
    if (tol <= 0) throw std::invalid_argument("q_product: tol must be positive");
    if (x < 0 || x > 1) throw std::invalid_argument("q_product: x must be in [0,1]");
    double p = 1.0;
    for (int k = 1; k < 4096; ++k) {
        p *= 1.0 - x * std::ldexp(1.0, -k);
        // remaining factors differ from 1 by at most 2 x 2^-k in product
        if (2.0 * x * std::ldexp(1.0, -k) < tol) return p;
    }
    throw std::runtime_error("q_product: tolerance unreachable");
}

double alpha_constant(double tol) {
    if (tol <= 0) throw std::invalid_argument("alpha_constant: tol must be positive");
    double s = 0.0;
    for (int k = 1; k < 4096; ++k) {
        s += 1.0 / (std::ldexp(1.0, k) - 1.0);
        if (std::ldexp(2.0, -k) < tol) return s;
    }
    throw std::runtime_error("alpha_constant: tolerance unreachable");
}

double euler_gamma(double tol) {
    if (tol < 1e-13) throw std::invalid_argument("euler_gamma: tol below certified range");
    // gamma = H_N - ln N - 1/(2N) + 1/(12N^2) - 1/(120N^4) + R, |R| <= 1/(252 N^6).
    const long N = 10000;  // remainder ~ 4e-27, far below any permitted tol
    double h = harmonic(N).to_double();
    double n = static_cast<double>(N);
    return h - std::log(n) - 1.0 / (2 * n) + 1.0 / (12 * n * n) -
           1.0 / (120 * n * n * n * n);
}

double zeta(double s, double tol) {
    if (s <= 1.0) throw std::invalid_argument("zeta: requires s > 1");
    if (tol <= 0) throw std::invalid_argument("zeta: tol must be positive");
    const double scale = 1.0 - std::pow(2.0, 1.0 - s);
    double eta = 0.0;
    double sign = 1.0;
    for (long n = 1; n < 200000000L; ++n) {
        const double term = sign * std::pow(static_cast<double>(n), -s);
        eta += term;
        sign = -sign;
        // alternating series with decreasing terms: remainder <= next term
        const double next = std::pow(static_cast<double>(n + 1), -s);
        if (next < tol * scale) return eta / scale;
    }
    throw std::runtime_error("zeta: tolerance unreachable");
}

}  // namespace qcomb

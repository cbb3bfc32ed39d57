#include "qcomb/euler_ramanujan.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qcomb/numerics.hpp"

namespace qcomb::sums {

Rat alt_binom_sum(long n, long m) {
    if (n < 1 || m < 1)
        throw std::domain_error("alt_binom_sum: n and m must be positive");
    Rat s(0);
    for (long k = 1; k <= n; ++k) {
        Int km;
        mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(m));
        const Rat t(binomial(n, k), km);
        s = (k % 2 == 1) ? s + t : s - t;
    }
    return s;
}

Rat harmonic_exp_extract(long n, long m) {
    if (n < 1 || m < 1)
        throw std::domain_error("harmonic_exp_extract: n and m must be positive");
    const int order = static_cast<int>(m);
    Series g(order);
    for (int j = 1; j <= order; ++j)
        g.set(j, harmonic(n, j) / Rat(j));
    return g.exp().coeff(order);
}

double euler_sum(long p, long q, double tol) {
    if (p < 1) throw std::domain_error("euler_sum: p must be >= 1");
    if (q < 2) throw std::domain_error("euler_sum: q must be >= 2");
    if (tol <= 0) throw std::domain_error("euler_sum: tol must be positive");

    const double dq = static_cast<double>(q);
    const double gamma_c = euler_gamma(1e-13);
    const double zp = (p >= 2) ? zeta(static_cast<double>(p), 1e-14) : 0.0;

    // Certified truncation error at cut N. For p = 1 split H_n = ln n +
    // gamma + eps_n with 0 < eps_n < 1/(2n); for p >= 2 split H_n^{(p)} =
    // zeta(p) - r_n with (p-1) r_n between (n+1)^{1-p} and n^{1-p}. Each
    // piece of the tail is bracketed by integrals and replaced by the
    // bracket midpoint, so the error is half the bracket width.
    auto bound_at = [&](double N) {
        if (p == 1)
            return 0.5 * (std::log(N) + gamma_c) * std::pow(N, -dq) +
                   0.25 * std::pow(N, -dq) / dq;
        return 0.5 * zp * std::pow(N, -dq) +
               0.5 * std::pow(N, 2.0 - p - dq) / ((p - 1) * (p + dq - 2.0));
    };
    long N = 64;
    while (bound_at(static_cast<double>(N)) > 0.5 * tol) {
        N *= 2;
        if (N > (1L << 26))
            throw std::runtime_error("euler_sum: tolerance out of reach");
    }

    long double partial = 0.0L, h = 0.0L;
    for (long n = 1; n <= N; ++n) {
        long double ip = 1.0L / n;
        for (long e = 1; e < p; ++e) ip /= n;
        h += ip;
        partial += h / powl(static_cast<long double>(n), static_cast<long double>(q));
    }

    const double dN = static_cast<double>(N);
    double tail;
    if (p == 1) {
        // integral of (ln x + gamma) x^{-q} from a to infinity
        auto intlog = [&](double a) {
            return std::pow(a, 1.0 - dq) *
                   ((std::log(a) + gamma_c) / (dq - 1.0) + 1.0 / ((dq - 1.0) * (dq - 1.0)));
        };
        tail = 0.5 * (intlog(dN) + intlog(dN + 1.0)) +
               0.25 * std::pow(dN, -dq) / dq;
    } else {
        const double s1 = 0.5 * (std::pow(dN, 1.0 - dq) + std::pow(dN + 1.0, 1.0 - dq)) / (dq - 1.0);
        const double s2 = 0.5 * std::pow(dN, 2.0 - p - dq) / ((p - 1) * (p + dq - 2.0));
        tail = zp * s1 - s2;
    }
    return static_cast<double>(partial) + tail;
}

}  // namespace qcomb::sums

namespace qcomb::ramanujan {

Rat ramanujan_Q(long n) {
    if (n < 1) throw std::domain_error("ramanujan_Q: n must be positive");
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n - 1));
    Int s(0), ff(1), scale = denom;  // scale = n^{n-1-k}
    for (long k = 0; k <= n - 1; ++k) {
        s += ff * scale;
        if (k == n - 1) break;
        ff *= (n - 1 - k);
        mpz_divexact_ui(scale.get_mpz_t(), scale.get_mpz_t(),
                        static_cast<unsigned long>(n));
    }
    return Rat(s, denom);
}

double ramanujan_R(long n, double tol) {
    if (n < 1) throw std::domain_error("ramanujan_R: n must be positive");
    if (tol <= 0) throw std::domain_error("ramanujan_R: tol must be positive");
    long double sum = 1.0L, t = 1.0L;
    for (long k = 1;; ++k) {
        t *= static_cast<long double>(n) / (n + k);
        sum += t;
        // every later ratio is at most n/(n+k+1), so the remaining tail is
        // below t * n/(k+1)
        if (static_cast<double>(t) * n / (k + 1) < tol) break;
        if (k > 100000000L)
            throw std::runtime_error("ramanujan_R: did not converge");
    }
    return static_cast<double>(sum);
}

double q_plus_r_reference(long n) {
    if (n < 1) throw std::domain_error("q_plus_r_reference: n must be positive");
    const double dn = static_cast<double>(n);
    return std::exp(std::lgamma(dn + 1.0) + dn - dn * std::log(dn));
}

ThetaK theta_k(long n, double tol) {
    if (n < 1) throw std::domain_error("theta_k: n must be positive");
    const double r = ramanujan_R(n, std::min(tol, 1e-12));
    const double d = r - ramanujan_Q(n).to_double();
    const double excess = d - 2.0 / 3.0;
    if (excess == 0.0)
        throw std::runtime_error("theta_k: D hit 2/3 exactly");
    return {d, 8.0 / (135.0 * excess) - static_cast<double>(n)};
}

Series tree_function(int order) {
    if (order < 1) throw std::domain_error("tree_function: order must be positive");
    Series y(order);
    for (int pass = 0; pass <= order + 1; ++pass) {
        Series next = Series::x(order) * y.exp();
        if (next == y) return y;
        y = next;
    }
    throw std::logic_error("tree_function: fixed point not reached");
}

double q_asymptotic_deviation(long n) {
    const double q = ramanujan_Q(n).to_double();
    return std::fabs(q - std::sqrt(M_PI * n / 2.0) + 1.0 / 3.0);
}

double gamma_real(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma_real: x must be positive");
    // Raise the argument until the B_2..B_16 series has its first omitted
    // term (0.18 y^-17) below 1e-24, then divide the shift back out.
    double shift = 1.0, y = x;
    while (y < 24.0) {
        shift *= y;
        y += 1.0;
    }
    static const double coeff[] = {
        1.0 / 12,   -1.0 / 360,       1.0 / 1260, -1.0 / 1680,
        1.0 / 1188, -691.0 / 360360,  1.0 / 156,  -3617.0 / 122400};
    const double inv = 1.0 / y, inv2 = inv * inv;
    double corr = 0.0, pw = inv;
    for (double c : coeff) {
        corr += c * pw;
        pw *= inv2;
    }
    const double lng =
        (y - 0.5) * std::log(y) - y + 0.5 * std::log(2.0 * M_PI) + corr;
    return std::exp(lng) / shift;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double fm,
                        double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double eps) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, fa, b, fb, fm, whole, eps, 40);
}

}  // namespace

MasterTheoremReport master_theorem_check(double s, double tol) {
    if (!(s > 0.0 && s < 1.0))
        throw std::domain_error("master_theorem_check: s must lie in (0,1)");
    if (tol <= 0) throw std::domain_error("master_theorem_check: tol must be positive");
    // Head: substitute u = x^s, so integral_0^1 x^{s-1} e^{-x} dx =
    // (1/s) integral_0^1 exp(-u^{1/s}) du with a bounded smooth integrand.
    const double inv_s = 1.0 / s;
    const double head = inv_s * integrate([&](double u) {
        return std::exp(-std::pow(u, inv_s));
    }, 0.0, 1.0, 0.125 * tol * s);
    // Body to x = 60; the remaining tail is under 60^{s-1} e^{-60} < 1e-26.
    const double body = integrate([&](double x) {
        return std::pow(x, s - 1.0) * std::exp(-x);
    }, 1.0, 60.0, 0.125 * tol);
    MasterTheoremReport rep;
    rep.integral = head + body;
    rep.gamma = M_PI / (std::sin(M_PI * s) * gamma_real(1.0 - s));
    rep.diff = std::fabs(rep.integral - rep.gamma);
    rep.tol = tol;
    rep.pass = rep.diff <= tol;
    return rep;
}

}  // namespace qcomb::ramanujan

#include "qcomb/level_seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcomb::levels {

Int count_dp(long n) {
    if (n < 1) throw std::domain_error("count_dp: n must be positive");
    if (n == 1) return Int(1);
    // w[rem][last]: ways to extend a sequence whose last entry is `last` by
    // further entries summing to rem (each next entry t satisfies
    // 1 <= t <= 2*last, then the bound moves to t).
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n + 1));
    for (long last = 0; last <= n; ++last) w[0][last] = 1;
    for (long rem = 1; rem < n; ++rem) {
        for (long last = 1; last <= n; ++last) {
            Int acc(0);
            const long tmax = std::min(2 * last, rem);
            for (long t = 1; t <= tmax; ++t) acc += w[rem - t][t];
            w[rem][last] = acc;
        }
    }
    return w[n - 1][1];
}

SliceState slice_initial(int order_q, int order_u) {
    if (order_q < 1 || order_u < 1)
        throw std::domain_error("slice_initial: orders must be positive");
    BiSeries f(order_q, order_u);
    f.set(1, 1, Rat(1));
    return {f, 1};
}

SliceState slice_iterate(const SliceState& s) {
    const int oq = s.f.order1(), ou = s.f.order2();
    // d = F_k(q,1) - F_k(q, u^2 q^2): row sums land at u^0, the substitution
    // sends (a, b) to (a + 2b, 2b). With ou >= oq a dropped target is
    // invisible below q^oq anyway.
    BiSeries d(oq, ou);
    for (int a = 0; a <= oq; ++a) {
        Rat row(0);
        for (int b = 0; b <= ou; ++b) row = row + s.f.coeff(a, b);
        if (!row.is_zero()) d.set(a, 0, row);
    }
    for (int a = 0; a <= oq; ++a) {
        for (int b = 0; b <= ou; ++b) {
            const Rat& c = s.f.coeff(a, b);
            if (c.is_zero()) continue;
            const int aa = a + 2 * b, bb = 2 * b;
            if (aa <= oq && bb <= ou) d.set(aa, bb, d.coeff(aa, bb) - c);
        }
    }
    // Multiply by uq/(1-uq) = sum_{t>=1} (uq)^t: shifted prefix sums along
    // the diagonal, g(a,b) = d(a-1,b-1) + g(a-1,b-1).
    BiSeries g(oq, ou);
    for (int a = 1; a <= oq; ++a) {
        for (int b = 1; b <= ou; ++b) {
            Rat v = d.coeff(a - 1, b - 1) + g.coeff(a - 1, b - 1);
            if (!v.is_zero()) g.set(a, b, v);
        }
    }
    return {g, s.height + 1};
}

std::vector<Int> slice_counts(int order) {
    if (order < 1) throw std::domain_error("slice_counts: order must be positive");
    std::vector<Rat> acc(order + 1, Rat(0));
    SliceState s = slice_initial(order, order);
    // Height k needs total >= k, so heights beyond `order` cannot contribute.
    for (int k = 1; k <= order; ++k) {
        for (int a = 0; a <= order; ++a)
            for (int b = 0; b <= order; ++b) acc[a] = acc[a] + s.f.coeff(a, b);
        if (k < order) s = slice_iterate(s);
    }
    std::vector<Int> out(order + 1);
    for (int a = 0; a <= order; ++a) {
        if (!acc[a].is_integer())
            throw std::logic_error("slice_counts: non-integer coefficient");
        out[a] = acc[a].num();
    }
    return out;
}

Series gf_closed(int order) {
    if (order < 1) throw std::domain_error("gf_closed: order must be positive");
    Series num(order);
    Series den = Series::constant(Rat(1), order);
    Series prod = Series::constant(Rat(1), order);  // (1-q)(1-q^3)...(1-q^{2^j-1})
    for (int j = 1;; ++j) {
        const long e = (2L << j) - j - 2;  // 2^{j+1} - j - 2
        if (e > order) break;
        const Rat sign(j % 2 == 1 ? 1 : -1);
        const Series qe = Series::constant(sign, order).shifted(static_cast<int>(e));
        num = num + qe / prod;  // products stop at 2^{j-1} - 1 in the numerator
        const long m = (1L << j) - 1;
        Series factor = Series::constant(Rat(1), order);
        if (m <= order) factor.set(static_cast<int>(m), Rat(-1));
        prod = prod * factor;
        den = den - qe / prod;
    }
    return num / den;
}

double gf_denominator_at(double q, double tol) {
    if (!(q > 0.0 && q <= 0.85))
        throw std::domain_error("gf_denominator_at: q must lie in (0, 0.85]");
    if (tol <= 0) throw std::domain_error("gf_denominator_at: tol must be positive");
    double sum = 0.0, prod = 1.0;
    const double lq = std::log(q);
    for (int j = 1; j <= 64; ++j) {
        prod *= 1.0 - std::exp((std::pow(2.0, j) - 1.0) * lq);
        const double e = std::pow(2.0, j + 1) - j - 2.0;
        const double x = std::exp(e * lq) / prod;
        sum += (j % 2 == 1) ? x : -x;
        // Once a term is below tol/4 the exponents have grown enough that
        // successive terms shrink at least geometrically by 1/2, so the
        // remaining tail is below tol/4 as well.
        if (x < 0.25 * tol) break;
    }
    return 1.0 - sum;
}

double dominant_pole(double tol) {
    if (tol <= 0) throw std::domain_error("dominant_pole: tol must be positive");
    const double eval_tol = 1e-13;
    double lo = 0.3, hi = 0.7;
    double flo = gf_denominator_at(lo, eval_tol);
    double fhi = gf_denominator_at(hi, eval_tol);
    if (!((flo > 0) != (fhi > 0)))
        throw std::runtime_error("dominant_pole: no sign change on (0.3, 0.7)");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = gf_denominator_at(mid, eval_tol);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

GrowthFit growth_fit(long n, double tol) {
    if (n < 2) throw std::domain_error("growth_fit: n must be at least 2");
    const Int hn = count_dp(n);
    const Int hn1 = count_dp(n - 1);
    const double pole = dominant_pole(tol);
    GrowthFit out;
    out.rate = Rat(hn, hn1).to_double();
    out.amplitude = hn.get_d() * std::pow(pole, static_cast<double>(n));
    out.pole = pole;
    return out;
}

}  // namespace qcomb::levels

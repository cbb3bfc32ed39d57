#include "qcomb/perron.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qcomb::perron {

Rat perron_lhs(const Coeffs& lam, long n, int m) {
    if (n < 1) throw std::domain_error("perron_lhs: n must be positive");
    if (m != 0 && m != 1) throw std::domain_error("perron_lhs: m must be 0 or 1");
    Rat s(0);
    for (const auto& [k, l] : lam) {
        if (k < 1) throw std::domain_error("perron_lhs: support must be >= 1");
        if (k < n)
            s = s + (m == 0 ? l : l * Rat(n - k, n));
        else if (k == n && m == 0)
            s = s + l / Rat(2);
    }
    return s;
}

namespace {

struct Term {
    double lam;    // lambda_k as double
    double amp;    // |lambda_k| (n/k)^c
    double slam;   // lambda_k (n/k)^c (signed amplitude)
    double omega;  // ln(n/k)
};

}  // namespace

PerronResult perron_rhs_numeric(const Coeffs& lam, long n, int m, double c,
                                double T, double tol) {
    if (n < 1) throw std::domain_error("perron_rhs_numeric: n must be positive");
    if (m != 0 && m != 1)
        throw std::domain_error("perron_rhs_numeric: m must be 0 or 1");
    if (!(c > 0)) throw std::domain_error("perron_rhs_numeric: c must be positive");
    if (!(T > 0) || !(tol > 0))
        throw std::domain_error("perron_rhs_numeric: T and tol must be positive");

    std::vector<Term> terms;
    double omega_max = 0.0;
    for (const auto& [k, l] : lam) {
        if (k < 1)
            throw std::domain_error("perron_rhs_numeric: support must be >= 1");
        const double lv = l.to_double();
        if (lv == 0.0) continue;
        const double w = std::log(static_cast<double>(n) / static_cast<double>(k));
        const double a = std::fabs(lv) * std::pow(static_cast<double>(n) / k, c);
        terms.push_back({lv, a, lv * std::pow(static_cast<double>(n) / k, c), w});
        omega_max = std::max(omega_max, std::fabs(w));
    }
    if (terms.empty()) return {0.0, 0.0, T, true};

    // Tail estimates from integration by parts on each e^{i omega t} / D(t)
    // piece; terms with omega = 0 have elementary arctan tails.
    const double L = static_cast<double>(terms.size());
    const double tol_share = tol / L;
    double est = 0.0, suggested = T;
    for (const Term& t : terms) {
        const double w = std::fabs(t.omega);
        double e, want;
        if (w < 1e-12) {
            if (m == 0) {
                e = t.amp * std::atan(c / T) / M_PI;
                want = 1.1 * t.amp * c / (M_PI * tol_share);
            } else {
                e = t.amp * (std::atan((c + 1) / T) - std::atan(c / T)) / M_PI;
                want = 1.1 * t.amp / (M_PI * tol_share);
            }
        } else if (m == 0) {
            e = t.amp * (1.0 / (M_PI * w * T) + 2.0 / (M_PI * w * w * T * T));
            want = 1.1 * t.amp / (M_PI * w * tol_share);
        } else {
            e = t.amp * 3.0 / (M_PI * w * T * T);
            want = std::sqrt(3.3 * t.amp / (M_PI * w * tol_share));
        }
        est += e;
        suggested = std::max(suggested, want);
    }

    // Composite Simpson rule; the step resolves both the fastest rotation
    // and the t ~ c scale where 1/|s| peaks.
    const double scale = std::max({omega_max, 1.0 / c, 1.0});
    const double h_want = std::min(0.01, 0.04 / scale);
    const long panels = 2 * std::max(1L, static_cast<long>(std::ceil(T / (2 * h_want))));
    const double h = T / static_cast<double>(panels);

    std::vector<std::complex<double>> rot(terms.size()), cur(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        rot[i] = std::polar(1.0, terms[i].omega * h);
        cur[i] = 1.0;
    }
    long double acc = 0.0L;
    for (long j = 0; j <= panels; ++j) {
        const double t = h * static_cast<double>(j);
        std::complex<double> num(0.0, 0.0);
        for (std::size_t i = 0; i < terms.size(); ++i)
            num += terms[i].slam * cur[i];
        const std::complex<double> s(c, t);
        const std::complex<double> den = (m == 0) ? s : s * (s + 1.0);
        const double f = (num / den).real();
        const double wgt = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        acc += wgt * f;
        if ((j & 511) == 511) {
            for (std::size_t i = 0; i < terms.size(); ++i)
                cur[i] = std::polar(1.0, terms[i].omega * (t + h));
        } else {
            for (std::size_t i = 0; i < terms.size(); ++i) cur[i] *= rot[i];
        }
    }
    const double integral = static_cast<double>(acc) * h / 3.0;

    PerronResult out;
    out.value = integral / M_PI;
    out.trunc_est = est;
    out.suggested_T = suggested;
    out.certified = est <= tol;
    return out;
}

}  // namespace qcomb::perron

#include "qcomb/fm_sketch.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qcomb/numerics.hpp"

namespace qcomb::fm {

UrnSketch::UrnSketch(int width) : width_(width), overflow_(false) {
    if (width < 1) throw std::invalid_argument("UrnSketch: width must be >= 1");
    words_.assign((width + 63) / 64, 0);
}

void UrnSketch::insert(int g) {
    if (g < 0) throw std::invalid_argument("UrnSketch::insert: negative draw");
    if (g >= width_) {
        g = width_ - 1;
        overflow_ = true;
    }
    words_[g / 64] |= std::uint64_t(1) << (g % 64);
}

int UrnSketch::observe_R() const {
    for (int i = 0; i < width_; ++i) {
        if (((words_[i / 64] >> (i % 64)) & 1) == 0) return i;
    }
    return width_;
}

void UrnSketch::merge(const UrnSketch& other) {
    if (other.width_ != width_)
        throw std::invalid_argument("UrnSketch::merge: width mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    overflow_ = overflow_ || other.overflow_;
}

std::string UrnSketch::bitmap() const {
    std::string s(width_, '0');
    for (int i = 0; i < width_; ++i) {
        if ((words_[i / 64] >> (i % 64)) & 1) s[i] = '1';
    }
    return s;
}

int nu(std::uint64_t j) { return std::popcount(j); }

int tm_sign(std::uint64_t j) { return (std::popcount(j) & 1) ? -1 : 1; }

namespace {

// T_i = sum_{j < 2^k} (-1)^nu(j) j^i for i = 0..imax. Splitting the block
// into even and odd j gives T_i^{(k)} = -sum_{t<i} C(i,t) 2^t T_t^{(k-1)},
// starting from T^{(0)} = (1, 0, 0, ...). All entries are integers.
std::vector<Int> signed_power_sums(int k, long imax) {
    std::vector<Int> t(imax + 1);
    t[0] = 1;
    for (int level = 1; level <= k; ++level) {
        std::vector<Int> next(imax + 1);
        for (long i = imax; i >= 0; --i) {
            Int s(0);
            for (long u = 0; u < i; ++u) {
                if (t[u] != 0) s += binomial(i, u) * (t[u] << u);
            }
            next[i] = -s;
        }
        t = std::move(next);
    }
    return t;
}

// q(n,k) from a precomputed power-sum table for this k.
Rat q_from_sums(long n, int k, const std::vector<Int>& t) {
    Int num(0);
    const unsigned long kn = static_cast<unsigned long>(k) * n;
    for (long i = 0; i <= n; ++i) {
        if (t[i] == 0) continue;
        // C(n,i) (-1)^i T_i / 2^{ki}, brought over the denominator 2^{kn}
        Int term = binomial(n, i) * t[i];
        term <<= kn - static_cast<unsigned long>(k) * i;
        if (i % 2 == 0) num += term; else num -= term;
    }
    return Rat(num, pow2(kn));
}

}  // namespace

Rat q_exact(long n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("q_exact: bad arguments");
    if (k == 0) return Rat(1);
    return q_from_sums(n, k, signed_power_sums(k, n));
}

std::vector<Rat> q_exact_row(long nmax, int k) {
    if (nmax < 0 || k < 0) throw std::invalid_argument("q_exact_row: bad arguments");
    std::vector<Rat> row(nmax + 1);
    if (k == 0) {
        for (auto& r : row) r = Rat(1);
        return row;
    }
    const std::vector<Int> t = signed_power_sums(k, nmax);
    for (long n = 0; n <= nmax; ++n) row[n] = q_from_sums(n, k, t);
    return row;
}

Rat q_direct(long n, int k) {
    if (n < 0 || k < 0 || k > 20) throw std::invalid_argument("q_direct: bad arguments");
    const long top = 1L << k;
    Int num(0);
    for (long j = 0; j <= top; ++j) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(top - j),
                      static_cast<unsigned long>(n));
        if (tm_sign(static_cast<std::uint64_t>(j)) > 0) num += p; else num -= p;
    }
    return Rat(num, pow2(static_cast<unsigned long>(k) * n));
}

Rat q_oracle(long n, int k) {
    if (n < 0 || n > 8 || k < 0 || k > 4)
        throw std::invalid_argument("q_oracle: exhaustive route capped at n <= 8, k <= 4");
    if (k == 0) return Rat(1);
    // outcome i < k is urn i (weight 2^{k-1-i} over denominator 2^k),
    // outcome k is "any urn >= k" (weight 1)
    std::vector<long> weight(k + 1);
    for (int i = 0; i < k; ++i) weight[i] = 1L << (k - 1 - i);
    weight[k] = 1;
    std::vector<int> pick(n, 0);
    const unsigned full = (1u << k) - 1;
    Int covered(0);
    while (true) {
        unsigned mask = 0;
        long w = 1;
        for (long b = 0; b < n; ++b) {
            w *= weight[pick[b]];
            if (pick[b] < k) mask |= 1u << pick[b];
        }
        if (mask == full) covered += w;
        long b = 0;
        while (b < n && ++pick[b] > k) {
            pick[b] = 0;
            ++b;
        }
        if (b == n) break;
    }
    return Rat(covered, pow2(static_cast<unsigned long>(k) * n));
}

std::vector<std::vector<Rat>> q_dp_table(long nmax, int kmax) {
    if (nmax < 0 || kmax < 0) throw std::invalid_argument("q_dp_table: bad arguments");
    std::vector<std::vector<Rat>> t(kmax + 1, std::vector<Rat>(nmax + 1));
    for (long n = 0; n <= nmax; ++n) t[0][n] = Rat(1);
    for (int k = 1; k <= kmax; ++k) {
        for (long n = 1; n <= nmax; ++n) {
            Rat s(0);
            for (long m = 1; m <= n; ++m) {
                if (!t[k - 1][n - m].is_zero())
                    s += Rat(binomial(n, m)) * t[k - 1][n - m];
            }
            t[k][n] = s / Rat(pow2(static_cast<unsigned long>(n)));
        }
    }
    return t;
}

Rat mean_R_exact(long n) {
    if (n < 1 || n > 128)
        throw std::invalid_argument("mean_R_exact: exact route restricted to 1 <= n <= 128");
    // advance the power-sum table one k-level at a time; q(n,k) = 0 for k > n
    std::vector<Int> t(n + 1);
    t[0] = 1;
    Rat total(0);
    for (int k = 1; k <= n; ++k) {
        std::vector<Int> next(n + 1);
        for (long i = n; i >= 0; --i) {
            Int s(0);
            for (long u = 0; u < i; ++u) {
                if (t[u] != 0) s += binomial(i, u) * (t[u] << u);
            }
            next[i] = -s;
        }
        t = std::move(next);
        total += q_from_sums(n, k, t);
    }
    return total;
}

double mean_R(long n, double tol) {
    if (n < 1) throw std::invalid_argument("mean_R: n must be >= 1");
    if (tol <= 0) tol = 1e-12;
    if (n <= 128) return mean_R_exact(n).to_double();

    const int lg = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
    const int kmax = lg + 40;

    // binomial windows: for each size, C(sz,m) 2^-sz for m within 10 standard
    // deviations of sz/2 (omitted mass < 2 e^-50, far below any tolerance)
    std::vector<double> lgam(n + 2);
    for (long i = 0; i <= n + 1; ++i) lgam[i] = std::lgamma(static_cast<double>(i + 1));
    std::vector<long> wlo(n + 1);
    std::vector<std::vector<double>> wts(n + 1);
    for (long sz = 1; sz <= n; ++sz) {
        const double dev = 5.0 * std::sqrt(static_cast<double>(sz));
        const long lo = std::max(1L, static_cast<long>(std::floor(sz / 2.0 - dev)));
        const long hi = std::min(sz, static_cast<long>(std::ceil(sz / 2.0 + dev)));
        wlo[sz] = lo;
        wts[sz].resize(hi - lo + 1);
        for (long m = lo; m <= hi; ++m) {
            const double lw = lgam[sz] - lgam[m] - lgam[sz - m] -
                              sz * std::numbers::ln2;
            wts[sz][m - lo] = std::exp(lw);
        }
    }

    std::vector<double> prev(n + 1, 1.0);  // q(., 0) = 1
    double total = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        std::vector<double> cur(n + 1, 0.0);
        for (long sz = 1; sz <= n; ++sz) {
            const long lo = wlo[sz];
            const auto& w = wts[sz];
            double s = 0.0;
            for (std::size_t o = 0; o < w.size(); ++o) s += w[o] * prev[sz - (lo + o)];
            cur[sz] = s;
        }
        total += cur[n];
        if (k > lg + 10 && cur[n] < tol / 1024.0) break;
        prev = std::move(cur);
    }
    return total;
}

double psi_product(double x, double tol) {
    if (x <= 0 || tol <= 0) throw std::invalid_argument("psi_product: bad arguments");
    double p = 1.0;
    double scale = x;
    while (true) {
        p *= 1.0 - std::exp(-scale);
        // factors not yet taken have exponents >= 2 scale; their combined
        // effect on the product is below 4 e^{-2 scale} once scale >= 1
        if (scale >= 1.0 && 4.0 * std::exp(-2.0 * scale) < tol) break;
        scale *= 2.0;
    }
    return p;
}

double psi_series(double x, double tol) {
    if (x <= 0 || tol <= 0) throw std::invalid_argument("psi_series: bad arguments");
    const double y = std::exp(-x);
    double sum = 0.0;
    double yj = 1.0;  // y^j
    for (std::uint64_t j = 0;; ++j) {
        sum += tm_sign(j) * yj;
        yj *= y;
        if (yj / (1.0 - y) < tol) break;  // geometric tail bound
    }
    return sum;
}

double dirichlet_N_direct(double s, double tol) {
    if (s <= 1.0) throw std::invalid_argument("dirichlet_N_direct: requires s > 1");
    if (tol <= 0) throw std::invalid_argument("dirichlet_N_direct: bad tol");
    double sum = -1.0;  // j = 1 term
    for (long m = 1;; ++m) {
        // terms 2m and 2m+1 complete a pair; the remaining pairs are bounded
        // by sum_{m'>m} s (2m')^{-s-1} <= 2^{-s-1} m^{-s}
        sum += tm_sign(static_cast<std::uint64_t>(2 * m)) * std::pow(2.0 * m, -s);
        sum += tm_sign(static_cast<std::uint64_t>(2 * m + 1)) * std::pow(2.0 * m + 1, -s);
        if (std::pow(2.0, -s - 1) * std::pow(static_cast<double>(m), -s) < tol) break;
    }
    return sum;
}

double dirichlet_N_accel(double s, double tol) {
    if (s <= 0.0) throw std::invalid_argument("dirichlet_N_accel: requires s > 0");
    if (tol <= 0) throw std::invalid_argument("dirichlet_N_accel: bad tol");
    double sum = -1.0 - std::pow(2.0, -s) + std::pow(3.0, -s);
    for (long j = 1;; ++j) {
        const double fj = 4.0 * j;
        const double bracket = 1.0 - std::pow(1.0 + 1.0 / fj, -s) -
                               std::pow(1.0 + 2.0 / fj, -s) +
                               std::pow(1.0 + 3.0 / fj, -s);
        sum += tm_sign(static_cast<std::uint64_t>(j)) * std::pow(fj, -s) * bracket;
        // |group| <= 3 s (s+1) 4^-s / 16 j^{-s-2}; integral-compare the tail
        const double tail = 3.0 * s * std::pow(4.0, -s) / 16.0 *
                            std::pow(static_cast<double>(j), -s - 1.0);
        if (tail < tol) break;
    }
    return sum;
}

Rat fm_product_exact(long terms) {
    if (terms < 1 || terms > 64)
        throw std::invalid_argument("fm_product_exact: terms must be in 1..64");
    Rat p(1);
    for (long q = 1; q <= terms; ++q) {
        const Rat f(Int((4 * q + 1) * (4 * q + 2)), Int((4 * q) * (4 * q + 3)));
        p *= f.pow(tm_sign(static_cast<std::uint64_t>(q)));
    }
    return p;
}

double fm_product(long terms) {
    if (terms < 1) throw std::invalid_argument("fm_product: terms must be >= 1");
    double p = 1.0;
    for (long q = 1; q <= terms; ++q) {
        const double f = ((4.0 * q + 1) * (4.0 * q + 2)) / ((4.0 * q) * (4.0 * q + 3));
        p *= tm_sign(static_cast<std::uint64_t>(q)) > 0 ? f : 1.0 / f;
    }
    return p;
}

std::vector<std::uint64_t> simulate_fm(long n, long trials, std::uint64_t seed,
                                       int threads) {
    if (n < 0 || trials < 1) throw std::invalid_argument("simulate_fm: bad arguments");
    if (threads < 1) threads = 1;
    const std::size_t slots = 65;  // R of a width-64 sketch is in 0..64
    auto run = [&](long lo, long hi, std::vector<std::uint64_t>& hist) {
        for (long t = lo; t < hi; ++t) {
            BitStream bits(derive_stream(seed, static_cast<std::uint64_t>(t)));
            UrnSketch sk(64);
            for (long i = 0; i < n; ++i) sk.insert(bits.geometric());
            ++hist[static_cast<std::size_t>(sk.observe_R())];
        }
    };
    std::vector<std::uint64_t> hist(slots, 0);
    if (threads == 1) {
        run(0, trials, hist);
        return hist;
    }
    std::vector<std::vector<std::uint64_t>> parts(
        threads, std::vector<std::uint64_t>(slots, 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        const long lo = trials * w / threads;
        const long hi = trials * (w + 1) / threads;
        pool.emplace_back(run, lo, hi, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        for (std::size_t l = 0; l < slots; ++l) hist[l] += part[l];
    return hist;
}

}  // namespace qcomb::fm

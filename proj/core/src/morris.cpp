#include "qcomb/morris.hpp"

#include <stdexcept>
#include <thread>

#include "qcomb/numerics.hpp"

namespace qcomb::morris {

std::vector<Rat> pmf_dp(long n) {
    if (n < 0) throw std::invalid_argument("pmf_dp: negative n");
    std::vector<Rat> p(n + 2);
    p[1] = Rat(1);
    for (long t = 0; t < n; ++t) {
        // after t observations the level is at most t+1, so the update only
        // touches levels up to t+2; sweep downward to reuse the array
        for (long k = t + 2; k >= 2; --k) {
            p[k] = p[k] * (Rat(1) - Rat(Int(1), pow2(k))) +
                   p[k - 1] * Rat(Int(1), pow2(k - 1));
        }
        p[1] *= Rat(1, 2);
    }
    return p;
}

Rat pmf_closed(long n, int level) {
    if (n < 0 || level < 1) throw std::invalid_argument("pmf_closed: bad arguments");
    const std::vector<Rat> q = qpoch_table(level - 1);
    Rat total(0);
    for (int i = 0; i < level; ++i) {
        Rat term = Rat(Int(1), pow2(static_cast<unsigned long>(i) * (i - 1) / 2));
        term /= q[i] * q[level - 1 - i];
        term *= (Rat(1) - Rat(Int(1), pow2(level - i))).pow(n);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

Series state_gf(int level, int order, const Rat& q) {
    if (level < 1) throw std::invalid_argument("state_gf: level must be >= 1");
    const Rat lead = q.pow(static_cast<long>(level) * (level - 1) / 2);
    Series num = Series::constant(lead, order).shifted(level - 1);
    Series den = Series::constant(Rat(1), order);
    for (int i = 1; i <= level; ++i) {
        Series factor(order);
        factor.set(0, Rat(1));
        if (order >= 1) factor.set(1, q.pow(i) - Rat(1));  // 1 - (1-q^i) z
        den = den * factor;
    }
    return num / den;
}

Rat mean_rice(long n) {
    if (n < 0) throw std::invalid_argument("mean_rice: negative n");
    // With Q_{k-1} = A_{k-1} / 2^{k(k-1)/2}, A_j = prod_{i<=j} (2^i - 1), the
    // k-th term is C(n,k) A_{k-1} / 2^{k(k+1)/2}. Everything is accumulated
    // over the common denominator 2^E, E = n(n+1)/2, in one big integer.
    const unsigned long E = static_cast<unsigned long>(n) * (n + 1) / 2;
    Int s(0), binom(1), a(1);
    for (long k = 1; k <= n; ++k) {
        binom *= (n - k + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                        static_cast<unsigned long>(k));
        Int term = binom * a;
        term <<= E - static_cast<unsigned long>(k) * (k + 1) / 2;
        if (k % 2 == 1) s += term; else s -= term;
        a *= pow2(k) - 1;
    }
    return Rat(pow2(E) + s, pow2(E));
}

BiSeries bivariate_iteration(int order_z, int order_u) {
    if (order_z < 0 || order_u < 0)
        throw std::invalid_argument("bivariate_iteration: negative order");
    BiSeries f(order_z, order_u);
    // Each pass settles one more z-row, so order_z + 2 passes must reach the
    // fixed point; one extra pass is allowed before giving up.
    for (int pass = 0; pass < order_z + 3; ++pass) {
        BiSeries next(order_z, order_u);
        // acc[j] = coefficient of u^j in sum_{i' < i} (u-1) F(z, u/2) rows,
        // which is exactly the z^i coefficient of z(u-1)/(1-z) F(z, u/2)
        std::vector<Rat> acc(order_u + 1);
        for (int i = 0; i <= order_z; ++i) {
            for (int j = 0; j <= order_u; ++j) {
                Rat v = acc[j];
                if (j == 1) v += Rat(1);  // the u/(1-z) part
                next.set(i, j, v);
            }
            for (int j = 0; j <= order_u; ++j) {
                Rat w = -(f.coeff(i, j) * Rat(Int(1), pow2(j)));
                if (j >= 1) w += f.coeff(i, j - 1) * Rat(Int(1), pow2(j - 1));
                acc[j] += w;
            }
        }
        if (next == f) return f;
        f = next;
    }
    throw std::runtime_error("bivariate_iteration: truncation did not stabilize");
}

std::vector<std::uint64_t> simulate(long n, long trials, std::uint64_t seed,
                                    int threads) {
    if (n < 0 || trials < 1) throw std::invalid_argument("simulate: bad arguments");
    if (threads < 1) threads = 1;
    const std::size_t levels = static_cast<std::size_t>(n) + 2;
    auto run = [&](long lo, long hi, std::vector<std::uint64_t>& hist) {
        for (long t = lo; t < hi; ++t) {
            MorrisCounter c(derive_stream(seed, static_cast<std::uint64_t>(t)));
            for (long i = 0; i < n; ++i) c.observe();
            ++hist[static_cast<std::size_t>(c.level())];
        }
    };
    std::vector<std::uint64_t> hist(levels, 0);
    if (threads == 1) {
        run(0, trials, hist);
        return hist;
    }
    std::vector<std::vector<std::uint64_t>> parts(
        threads, std::vector<std::uint64_t>(levels, 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        const long lo = trials * w / threads;
        const long hi = trials * (w + 1) / threads;
        pool.emplace_back(run, lo, hi, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        for (std::size_t l = 0; l < levels; ++l) hist[l] += part[l];
    return hist;
}

}  // namespace qcomb::morris

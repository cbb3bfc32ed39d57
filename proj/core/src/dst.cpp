#include "qcomb/dst.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qcomb/numerics.hpp"

namespace qcomb::dst {

template <class NextBit>
void DSTree::place(NextBit next_bit) {
    std::unique_ptr<Node>* slot = &root_;
    while (*slot) slot = &(*slot)->child[next_bit() ? 1 : 0];
    *slot = std::make_unique<Node>();
    ++size_;
}

void DSTree::insert(const std::string& key) {
    std::size_t pos = 0;
    place([&]() {
        if (pos >= key.size())
            throw std::runtime_error("DSTree::insert: key bits exhausted before a vacancy");
        const char c = key[pos++];
        if (c != '0' && c != '1')
            throw std::invalid_argument("DSTree::insert: key must be over {0,1}");
        return c == '1';
    });
}

void DSTree::insert(BitStream& bits) {
    place([&]() { return bits.take_bit(); });
}

long DSTree::count_endnodes() const {
    long count = 0;
    std::vector<const Node*> stack;
    if (root_) stack.push_back(root_.get());
    while (!stack.empty()) {
        const Node* nd = stack.back();
        stack.pop_back();
        if (!nd->child[0] && !nd->child[1]) {
            ++count;
            continue;
        }
        if (nd->child[0]) stack.push_back(nd->child[0].get());
        if (nd->child[1]) stack.push_back(nd->child[1].get());
    }
    return count;
}

Series endnode_poly(long n, long cap) {
    if (n < 0) throw std::invalid_argument("endnode_poly: negative n");
    if (n > cap) throw std::invalid_argument("endnode_poly: n beyond configured cap");
    std::vector<std::vector<Rat>> f(std::max<long>(n + 1, 2));
    f[0] = {Rat(1)};
    f[1] = {Rat(0), Rat(1)};
    for (long m = 2; m <= n; ++m) {
        std::vector<Rat> acc(m + 1);
        for (long k = 0; k <= m - 1; ++k) {
            const Rat cb(binomial(m - 1, k));
            const auto& a = f[k];
            const auto& b = f[m - 1 - k];
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].is_zero()) continue;
                const Rat ca = cb * a[i];
                for (std::size_t j = 0; j < b.size(); ++j) {
                    if (!b[j].is_zero()) acc[i + j] += ca * b[j];
                }
            }
        }
        const Rat scale(Int(1), pow2(static_cast<unsigned long>(m - 1)));
        for (auto& c : acc) c *= scale;
        while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
        f[m] = std::move(acc);
    }
    Series out(static_cast<int>(n));
    const auto& top = f[n];
    for (std::size_t i = 0; i < top.size(); ++i) out.set(static_cast<int>(i), top[i]);
    return out;
}

Rat ell_recurrence(long n) {
    if (n < 0) throw std::invalid_argument("ell_recurrence: negative n");
    if (n == 0) return Rat(0);
    std::vector<Rat> ell(n + 1);
    ell[1] = Rat(1);
    for (long m = 1; m < n; ++m) {
        Rat s(0);
        for (long k = 1; k <= m; ++k) {
            if (!ell[k].is_zero()) s += Rat(binomial(m, k)) * ell[k];
        }
        ell[m + 1] = s * Rat(Int(2), pow2(static_cast<unsigned long>(m)));
    }
    return ell[n];
}

Rat ell_hat_iter(long n) {
    if (n < 0) throw std::invalid_argument("ell_hat_iter: negative n");
    Rat h(0);
    for (long m = 0; m < n; ++m) {
        const Rat shrink = Rat(1) - Rat(Int(2), pow2(static_cast<unsigned long>(m)));
        h = Rat(m % 2 == 0 ? 1 : -1) - shrink * h;
    }
    return h;
}

Rat r_exact(long m) {
    if (m < 0) throw std::invalid_argument("r_exact: negative index");
    Rat r(1);
    for (long i = 1; i <= m; ++i) {
        r = (Rat(1) - Rat(Int(1), pow2(static_cast<unsigned long>(i)))) * r + Rat(1);
    }
    return r;
}

Rat ell_hat_closed(long n) {
    if (n < 0) throw std::invalid_argument("ell_hat_closed: negative n");
    if (n == 0) return Rat(0);
    if (n == 1) return Rat(1);
    const Rat r = r_exact(n - 2);
    return n % 2 == 0 ? -r : r;
}

Rat ell_from_hat(long n) {
    if (n < 0) throw std::invalid_argument("ell_from_hat: negative n");
    Rat s(0);
    Rat h(0);
    for (long k = 0; k <= n; ++k) {
        if (k > 0) {
            const Rat shrink =
                Rat(1) - Rat(Int(2), pow2(static_cast<unsigned long>(k - 1)));
            h = Rat((k - 1) % 2 == 0 ? 1 : -1) - shrink * h;
        }
        if (!h.is_zero()) s += Rat(binomial(n, k)) * h;
    }
    return s;
}

Rat ell_closed(long n) {
    if (n < 2) throw std::invalid_argument("ell_closed: requires n >= 2");
    // R_m = B_m / 2^{e_m} with e_m = m(m+1)/2 and
    // B_m = (2^m - 1) B_{m-1} + 2^{m + e_{m-1}}; all terms of the alternating
    // sum live over the shared denominator 2^E, E = e_{n-2}
    const unsigned long E = static_cast<unsigned long>(n - 2) * (n - 1) / 2;
    Int s(0);
    Int b(1);  // B_{k-2}, starting at B_0
    unsigned long e = 0;
    Int binom = Int(n) * (n - 1) / 2;  // C(n,2)
    for (long k = 2; k <= n; ++k) {
        Int term = binom * b;
        term <<= E - e;
        if (k % 2 == 0) s += term; else s -= term;
        if (k == n) break;
        // C(n,k+1) from C(n,k)
        binom *= n - k;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                        static_cast<unsigned long>(k + 1));
        // B_{k-1} from B_{k-2}
        const unsigned long m = static_cast<unsigned long>(k - 1);
        b = (b << m) - b + (Int(1) << (m + e));
        e += m;
    }
    return Rat(Int(n) * pow2(E) - s, pow2(E));
}

namespace {

double r_star_direct(double z, double tol) {
    const double alpha = alpha_constant(tol * 0.01);
    const double c = std::fabs(z + 1 - alpha);
    double denom = 1.0;
    double p = std::pow(2.0, -z - 1.0);  // 2^{-z-1-j}
    long double sum = 0.0;
    for (long j = 0;; ++j) {
        denom *= 1.0 - p;
        sum += (z + 1 + j - alpha) * p / denom;
        // once p <= 1/2 the remaining factors are positive and at least
        // Q_inf-sized in product, every later partial denominator has
        // magnitude >= |denom| (1 - p) / 4, and the numerators are
        // <= (c + j + 1 + i) p 2^{-i}
        if (p <= 0.5 &&
            4.0 * (c + j + 3) * p / (std::fabs(denom) * (1.0 - p)) < tol)
            break;
        p *= 0.5;
    }
    return static_cast<double>(sum);
}

}  // namespace

double r_star_product_form(double z, double tol) {
    if (tol <= 0) throw std::invalid_argument("r_star_product_form: bad tol");
    if (z < -0.5 && z == std::floor(z)) {
        if (z != -1.0)
            throw std::domain_error(
                "r_star_product_form: pole at negative integer z");
        // term by term the series is singular at -1 but its sum is analytic;
        // the symmetric average kills the odd part of the expansion, leaving
        // an eps^2 error on top of ~1e-12 of cancellation noise
        const double eps = 0x1p-19;
        return 0.5 * (r_star_direct(-1.0 + eps, tol) +
                      r_star_direct(-1.0 - eps, tol));
    }
    return r_star_direct(z, tol);
}

double r_star_partial_fraction(double z, double tol) {
    if (tol <= 0) throw std::invalid_argument("r_star_partial_fraction: bad tol");
    if (z != -1.0 && z == std::floor(z) && z < 0)
        throw std::domain_error("r_star_partial_fraction: pole at negative integer z");
    const double qinf = q_infinity(tol * 0.01);
    double sum = 0.0;
    double coeff = 1.0;  // 2^{-C(j,2)} / Q_{j-1}
    double qrun = 1.0;   // Q_{j-1}
    for (long j = 1;; ++j) {
        double factor;
        if (j == 1 && z == -1.0) {
            factor = 1.0 / std::numbers::ln2;  // lim (z+1)/(2^{z+1}-1)
        } else {
            const double x = z + j;
            factor = x / (std::pow(2.0, x) - 1.0);
        }
        sum += (j % 2 == 1 ? coeff : -coeff) * factor;
        // advance coeff to j+1: gains 2^-j and the next Q factor
        qrun *= 1.0 - std::pow(2.0, -static_cast<double>(j));
        coeff = std::pow(2.0, -static_cast<double>(j) * (j + 1) / 2) / qrun;
        if (z + j + 1 >= 1.0) {
            // (x)/(2^x - 1) <= 2 x 2^-x for x >= 1, and successive bounds
            // shrink by more than half, so the tail is within twice the next
            const double x = z + j + 1;
            const double next_bound = coeff * 2.0 * x * std::pow(2.0, -x);
            if (2.0 * next_bound < tol * qinf) break;  // qinf: the final division
        }
    }
    return sum / qinf;
}

double endnode_constant(double tol) {
    return alpha_constant(tol * 0.1) + 1.0 - r_star_partial_fraction(-1.0, tol * 0.1);
}

EulerIdentityReport euler_identity_checks(double tol) {
    if (tol <= 0) throw std::invalid_argument("euler_identity_checks: bad tol");
    EulerIdentityReport rep{};
    const double qinf = q_infinity(tol * 0.05);
    const double alpha = alpha_constant(tol * 0.05);

    double qrun = 1.0;  // Q_l
    double s_unit = 1.0, s_alpha = 0.0;  // l = 0 terms
    for (long l = 1;; ++l) {
        qrun *= 1.0 - std::pow(2.0, -static_cast<double>(l));
        const double w = std::pow(2.0, -static_cast<double>(l)) / qrun;
        s_unit += w;
        s_alpha += l * w;
        // tails: sum_{l'>l} 2^-l' / Q_inf and sum l' 2^-l' / Q_inf
        if ((l + 3.0) * std::pow(2.0, -static_cast<double>(l)) / qinf < tol * 0.25) break;
    }
    rep.lhs_unit = s_unit;
    rep.rhs_unit = 1.0 / qinf;
    rep.lhs_alpha = s_alpha;
    rep.rhs_alpha = alpha / qinf;

    const double t = 1.0 / 3.0;
    double qn = 1.0, tn = 1.0, s_third = 0.0;
    for (long m = 0;; ++m) {
        if (m > 0) {
            qn *= 1.0 - std::pow(2.0, -static_cast<double>(m));
            tn *= t;
        }
        s_third += tn / qn;
        if (tn * t / ((1.0 - t) * qinf) < tol * 0.25) break;  // geometric tail
    }
    double prod = 1.0;
    double x = t;
    while (x > tol * 0.1) {
        prod *= 1.0 - x;
        x *= 0.5;
    }
    rep.lhs_third = s_third;
    rep.rhs_third = 1.0 / prod;
    return rep;
}

std::vector<std::uint64_t> simulate_dst(long n, long trials, std::uint64_t seed,
                                        int threads) {
    if (n < 0 || trials < 1) throw std::invalid_argument("simulate_dst: bad arguments");
    if (threads < 1) threads = 1;
    const std::size_t slots = static_cast<std::size_t>(n) + 2;
    auto run = [&](long lo, long hi, std::vector<std::uint64_t>& hist) {
        for (long t = lo; t < hi; ++t) {
            BitStream bits(derive_stream(seed, static_cast<std::uint64_t>(t)));
            DSTree tree;
            for (long i = 0; i < n; ++i) tree.insert(bits);
            ++hist[static_cast<std::size_t>(tree.count_endnodes())];
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

}  // namespace qcomb::dst

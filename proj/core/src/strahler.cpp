#include "qcomb/strahler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcomb/numerics.hpp"

namespace qcomb::strahler {

BinaryTree leaf() { return BinaryTree{}; }

BinaryTree node(BinaryTree l, BinaryTree r) {
    BinaryTree t;
    t.left = std::make_unique<BinaryTree>(std::move(l));
    t.right = std::make_unique<BinaryTree>(std::move(r));
    return t;
}

int reg(const BinaryTree& t) {
    if (t.is_leaf()) return 0;
    int a = reg(*t.left);
    int b = reg(*t.right);
    return a == b ? a + 1 : (a > b ? a : b);
}

TreeTable::TreeTable(int cap) : cap_(cap) {
    if (cap < 0 || cap > 16) throw std::invalid_argument("TreeTable: cap out of range");
    nodes_.resize(cap + 1);
    reg_.resize(cap + 1);
    if (cap >= 0) reg_[0] = {0};  // the single leaf
    for (int m = 1; m <= cap; ++m) {
        // root with left subtree of size i, right of size m-1-i, in
        // lexicographic (i, left index, right index) order
        std::uint64_t total = 0;
        for (int i = 0; i < m; ++i) total += count(i) * count(m - 1 - i);
        nodes_[m].reserve(total);
        reg_[m].reserve(total);
        for (int i = 0; i < m; ++i) {
            const std::uint64_t nl = count(i), nr = count(m - 1 - i);
            for (std::uint64_t a = 0; a < nl; ++a) {
                const std::uint8_t ra = reg_[i][a];
                for (std::uint64_t b = 0; b < nr; ++b) {
                    const std::uint8_t rb = reg_[m - 1 - i][b];
                    nodes_[m].push_back(Node{static_cast<std::int8_t>(i),
                                             static_cast<std::uint32_t>(a),
                                             static_cast<std::uint32_t>(b)});
                    reg_[m].push_back(ra == rb ? ra + 1 : (ra > rb ? ra : rb));
                }
            }
        }
    }
}

std::uint64_t TreeTable::count(int size) const {
    if (size < 0 || size > cap_) throw std::invalid_argument("TreeTable::count: size beyond cap");
    return size == 0 ? 1 : nodes_[size].size();
}

int TreeTable::reg_of(int size, std::uint64_t index) const {
    if (size < 0 || size > cap_) throw std::invalid_argument("TreeTable::reg_of: size beyond cap");
    return reg_[size][index];
}

BinaryTree TreeTable::build(int size, std::uint64_t index) const {
    if (size == 0) return leaf();
    const Node& nd = nodes_[size][index];
    return node(build(nd.left_size, nd.left), build(size - 1 - nd.left_size, nd.right));
}

void enumerate_trees(const TreeTable& table, int n,
                     const std::function<void(int, std::uint64_t)>& visit) {
    if (n < 0 || n > table.cap())
        throw std::invalid_argument("enumerate_trees: size beyond configured cap");
    const std::uint64_t total = table.count(n);
    for (std::uint64_t i = 0; i < total; ++i) visit(n, i);
}

std::vector<std::uint64_t> census_by_enumeration(const TreeTable& table, int n) {
    std::vector<std::uint64_t> hist(n + 2, 0);
    enumerate_trees(table, n, [&](int size, std::uint64_t idx) {
        hist[table.reg_of(size, idx)]++;
    });
    return hist;
}

Series register_series(int p, int order) {
    if (p < 0) throw std::invalid_argument("register_series: negative p");
    Series sum_below = Series(order);  // sum_{j<p} R_j
    Series rp = Series::constant(Rat(1), order);
    const Series z = Series::x(order);
    for (int j = 1; j <= p; ++j) {
        sum_below = sum_below + rp;
        const Series denom =
            Series::constant(Rat(1), order) - Rat(2) * (z * sum_below);
        rp = (z * (rp * rp)) / denom;
    }
    return rp;
}

namespace {

// One bracket [C(2n, n+1-m) - 2 C(2n, n-m) + C(2n, n-1-m)] evaluated with a
// shared incremental row of C(2n, .) values would be overkill here; the mpz
// binomial is already cheap enough for the sizes the census uses. The mean,
// which sweeps all m <= n+1 at n up to 4096, gets the incremental row below.
Int bracket(long n, long m) {
    return binomial(2 * n, n + 1 - m) - 2 * binomial(2 * n, n - m) +
           binomial(2 * n, n - 1 - m);
}

int v2_long(long k) {
    int r = 0;
    while ((k & 1) == 0) {
        k >>= 1;
        ++r;
    }
    return r;
}

}  // namespace

Int count_register(long n, int p) {
    if (n < 1 || p < 1) throw std::invalid_argument("count_register: requires n, p >= 1");
    Int total(0);
    for (long k = 0;; ++k) {
        const long m = (2 * k + 1) << p;  // (2k+1) 2^p
        if (m > n + 1) break;
        total += bracket(n, m);
    }
    return total;
}

Int register_weighted_sum(long n) {
    if (n < 1) throw std::invalid_argument("register_weighted_sum: requires n >= 1");
    // sum_{k>=1} v2(k) [C(2n,n+1-k) - 2C(2n,n-k) + C(2n,n-1-k)], k <= n+1.
    // C(2n, n+1-k) is swept incrementally: C(2n, m-1) = C(2n, m) m / (2n-m+1).
    Int c_hi = binomial(2 * n, n);      // C(2n, n+1-k) at k=1
    Int c_mid = binomial(2 * n, n - 1);  // C(2n, n-k)   at k=1
    Int c_lo = binomial(2 * n, n - 2);   // C(2n, n-1-k) at k=1
    Int total(0);
    for (long k = 1; k <= n + 1; ++k) {
        const int w = v2_long(k);
        if (w != 0) {
            Int t = c_hi - 2 * c_mid + c_lo;
            total += w * t;
        }
        // shift the three-entry window down one column
        c_hi = std::move(c_mid);
        c_mid = std::move(c_lo);
        const long m = n - 2 - k;  // next lowest column index
        if (m >= 0) {
            // C(2n, m) = C(2n, m+1) (m+1) / (2n - m)
            Int next = c_mid;  // C(2n, m+1)
            next *= (m + 1);
            mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                            static_cast<unsigned long>(2 * n - m));
            c_lo = std::move(next);
        } else {
            c_lo = 0;
        }
    }
    return total;
}

Rat register_mean(long n) {
    return Rat(register_weighted_sum(n), catalan(n));
}

double register_d0(double tol) {
    const double g = euler_gamma(tol);
    const double ln2 = std::numbers::ln2;
    return 0.5 - g / (2 * ln2) - 1.0 / ln2 + std::log2(std::numbers::pi);
}

}  // namespace qcomb::strahler

#include "doctest.h"

#include <cmath>

#include "qcomb/numerics.hpp"
#include "qcomb/strahler.hpp"

using namespace qcomb;
using namespace qcomb::strahler;

TEST_CASE("small register censuses") {
    CHECK(count_register(1, 1) == 1);
    CHECK(count_register(2, 1) == 2);
    CHECK(count_register(3, 1) == 4);
    CHECK(count_register(3, 2) == 1);
    CHECK(count_register(3, 3) == 0);
    // the single full tree on 2^p - 1 internal nodes is the smallest with
    // register value p
    CHECK(count_register(6, 3) == 0);
    CHECK(count_register(7, 3) == 1);
}

TEST_CASE("enumeration agrees with the closed form for small sizes") {
    TreeTable table(8);
    for (int n = 1; n <= 8; ++n) {
        const auto hist = census_by_enumeration(table, n);
        Int total(0);
        for (std::size_t p = 1; p < hist.size(); ++p) {
            CHECK(Int(hist[p]) == count_register(n, static_cast<int>(p)));
            total += hist[p];
        }
        CHECK(total == catalan(n));
    }
}

TEST_CASE("register series coefficients") {
    const Series r1 = register_series(1, 10);
    // trees with register value 1 are the chains: 2^{n-1} of them
    for (int n = 1; n <= 10; ++n) CHECK(r1.coeff(n) == Rat(pow2(n - 1)));
    const Series r2 = register_series(2, 10);
    for (int n = 1; n <= 10; ++n) CHECK(r2.coeff(n) == Rat(count_register(n, 2)));
}

TEST_CASE("substitution z = u/(1+u)^2 collapses the series") {
    const int ord = 9;
    const Series u = Series::x(ord);
    const Series onepu = Series::constant(Rat(1), ord) + u;
    const Series lhs = register_series(1, ord).compose(u / (onepu * onepu));
    // u - u^3 + u^5 - u^7 + u^9
    for (int i = 0; i <= ord; ++i) {
        if (i % 2 == 1)
            CHECK(lhs.coeff(i) == Rat(i % 4 == 1 ? 1 : -1));
        else
            CHECK(lhs.coeff(i) == Rat(0));
    }
}

TEST_CASE("mean register value, exact small cases") {
    CHECK(register_mean(1) == Rat(1));
    CHECK(register_mean(2) == Rat(1));
    CHECK(register_mean(3) == Rat(6, 5));
    // weighted census cross-check
    TreeTable table(7);
    const auto hist = census_by_enumeration(table, 7);
    Rat mean(0);
    for (std::size_t p = 1; p < hist.size(); ++p)
        mean += Rat(static_cast<long>(p)) * Rat(Int(hist[p]), catalan(7));
    CHECK(register_mean(7) == mean);
}

TEST_CASE("centered mean approaches the mean constant") {
    const double d0 = register_d0(1e-12);
    CHECK(d0 == doctest::Approx(0.2924).epsilon(2e-4));
    const double centered =
        register_mean(4096).to_double() - 0.5 * std::log2(4096.0);
    CHECK(std::fabs(centered - d0) < 0.05);
}

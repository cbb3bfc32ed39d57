#include "doctest.h"

#include <cmath>

#include "qcomb/morris.hpp"

using namespace qcomb;
using namespace qcomb::morris;

TEST_CASE("level distribution after one and two events") {
    const auto p1 = pmf_dp(1);
    REQUIRE(p1.size() == 3);
    CHECK(p1[1] == Rat(1, 2));
    CHECK(p1[2] == Rat(1, 2));

    const auto p2 = pmf_dp(2);
    REQUIRE(p2.size() == 4);
    CHECK(p2[1] == Rat(1, 4));
    CHECK(p2[2] == Rat(5, 8));
    CHECK(p2[3] == Rat(1, 8));
}

TEST_CASE("closed form matches the dp for a sample of cells") {
    for (long n : {1L, 2L, 5L, 9L}) {
        const auto p = pmf_dp(n);
        for (int l = 1; l <= static_cast<int>(n) + 1; ++l)
            CHECK(p[l] == pmf_closed(n, l));
    }
}

TEST_CASE("per-level generating function tracks the dp") {
    const Series g1 = state_gf(1, 8);
    for (int n = 0; n <= 8; ++n) CHECK(g1.coeff(n) == Rat(1, pow2(n)));
    const Series g3 = state_gf(3, 8);
    for (long n = 2; n <= 8; ++n) CHECK(g3.coeff(static_cast<int>(n)) == pmf_dp(n)[3]);
}

TEST_CASE("bivariate fixpoint reproduces the dp") {
    const BiSeries f = bivariate_iteration(6, 7);
    for (long n = 1; n <= 6; ++n) {
        const auto p = pmf_dp(n);
        for (int l = 1; l <= static_cast<int>(n) + 1; ++l)
            CHECK(f.coeff(static_cast<int>(n), l) == p[l]);
    }
}

TEST_CASE("mean level values") {
    CHECK(mean_rice(1) == Rat(3, 2));
    CHECK(mean_rice(2) == Rat(15, 8));
    for (long n = 1; n <= 10; ++n) {
        const auto p = pmf_dp(n);
        Rat m(0);
        for (int l = 1; l < static_cast<int>(p.size()); ++l)
            m += Rat(l) * p[l];
        CHECK(mean_rice(n) == m);
    }
}

TEST_CASE("simulation is unbiased at a small size") {
    const long trials = 20000;
    const auto hist = simulate(2, trials, 7, 1);
    double mean = 0.0;
    for (std::size_t l = 0; l < hist.size(); ++l)
        mean += static_cast<double>(l) * static_cast<double>(hist[l]);
    mean /= static_cast<double>(trials);
    // exact variance at n=2 is 23/64; 5 sigma of the trial mean
    const double bound = 5.0 * std::sqrt(23.0 / 64.0 / trials);
    CHECK(std::fabs(mean - 1.875) < bound);
}

TEST_CASE("threaded simulation is partition independent") {
    const auto a = simulate(5, 4000, 99, 1);
    const auto b = simulate(5, 4000, 99, 4);
    CHECK(a == b);
}

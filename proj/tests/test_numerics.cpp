#include "doctest.h"

#include <cmath>

#include "qcomb/numerics.hpp"

using namespace qcomb;

TEST_CASE("binomials, factorials, catalan numbers") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 11) == 0);
    CHECK(factorial(10) == 3628800);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    // a big one: C(8192, 4096) spans 2464 decimal digits
    CHECK(binomial(8192, 4096).get_str().size() == 2464);
}

TEST_CASE("harmonic numbers, exact") {
    CHECK(harmonic(1) == Rat(1));
    CHECK(harmonic(2) == Rat(3, 2));
    CHECK(harmonic(6) == Rat(49, 20));
    CHECK(harmonic(4, 2) == Rat(205, 144));
    CHECK(harmonic(3, 3) == Rat(251, 216));
}

TEST_CASE("finite q-products at one half") {
    const auto t = qpoch_table(3);
    CHECK(t[0] == Rat(1));
    CHECK(t[1] == Rat(1, 2));
    CHECK(t[2] == Rat(3, 8));
    CHECK(t[3] == Rat(21, 64));
    CHECK(qpoch(2) == Rat(3, 8));
}

TEST_CASE("infinite q-product evaluated at one recovers the constant") {
    CHECK(q_product(1.0, 1e-13) ==
          doctest::Approx(q_infinity(1e-13)).epsilon(1e-12));
    CHECK(q_product(0.0, 1e-13) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("numeric constants") {
    CHECK(q_infinity(1e-14) == doctest::Approx(0.2887880951).epsilon(1e-9));
    CHECK(euler_gamma(1e-13) ==
          doctest::Approx(0.5772156649015329).epsilon(1e-12));
    // sum_{k>=1} 1/(2^k - 1)
    CHECK(alpha_constant(1e-13) ==
          doctest::Approx(1.6066951524152918).epsilon(1e-12));
    CHECK(zeta(2.0, 1e-12) ==
          doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-11));
    CHECK(zeta(3.0, 1e-12) ==
          doctest::Approx(1.2020569031595943).epsilon(1e-11));
}

#include "doctest.h"

#include <cmath>

#include "qcomb/euler_ramanujan.hpp"
#include "qcomb/numerics.hpp"

using namespace qcomb;
using namespace qcomb::sums;
using namespace qcomb::ramanujan;

TEST_CASE("alternating binomial sums, small exact values") {
    CHECK(alt_binom_sum(1, 1) == Rat(1));
    CHECK(alt_binom_sum(2, 1) == Rat(3, 2));
    CHECK(alt_binom_sum(2, 2) == Rat(7, 4));
    CHECK(alt_binom_sum(3, 1) == harmonic(3));
}

TEST_CASE("harmonic exponential extraction agrees") {
    for (long n = 1; n <= 12; ++n)
        for (long m = 1; m <= 4; ++m)
            CHECK(alt_binom_sum(n, m) == harmonic_exp_extract(n, m));
}

TEST_CASE("the first three closed forms in harmonic numbers") {
    for (long n = 1; n <= 12; ++n) {
        const Rat h1 = harmonic(n, 1), h2 = harmonic(n, 2), h3 = harmonic(n, 3);
        CHECK(alt_binom_sum(n, 1) == h1);
        CHECK(alt_binom_sum(n, 2) == (h1 * h1 + h2) / Rat(2));
        CHECK(alt_binom_sum(n, 3) ==
              h1 * h1 * h1 / Rat(6) + h1 * h2 / Rat(2) + h3 / Rat(3));
    }
}

TEST_CASE("linear euler sum with certified tail") {
    // sum_n H_n / n^2 = 2 zeta(3)
    const double v = euler_sum(1, 2, 1e-6);
    CHECK(v == doctest::Approx(2.4041138063191885).epsilon(1e-6));
}

TEST_CASE("front and tail of the exponential series split") {
    CHECK(ramanujan_Q(1) == Rat(1));
    CHECK(ramanujan_Q(2) == Rat(3, 2));
    CHECK(ramanujan_Q(4) == Rat(71, 32));
    CHECK(ramanujan_R(1, 1e-13) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
    // Q(n) + R(n) = n! e^n / n^n
    CHECK(ramanujan_Q(2).to_double() + ramanujan_R(2, 1e-13) ==
          doctest::Approx(q_plus_r_reference(2)).epsilon(1e-12));
    CHECK(q_plus_r_reference(1) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("the theta excess localizes k") {
    const auto tk1 = theta_k(1, 1e-13);
    CHECK(tk1.k == doctest::Approx(0.1481).epsilon(2e-3));
    for (long n : {1L, 10L, 50L}) {
        const auto tk = theta_k(n, 1e-12);
        CHECK(tk.k > 2.0 / 21.0);
        CHECK(tk.k < 8.0 / 45.0);
    }
}

TEST_CASE("tree function coefficients n^{n-1}/n!") {
    const Series y = tree_function(6);
    CHECK(y.coeff(0) == Rat(0));
    CHECK(y.coeff(1) == Rat(1));
    CHECK(y.coeff(2) == Rat(1));
    CHECK(y.coeff(3) == Rat(3, 2));
    CHECK(y.coeff(4) == Rat(8, 3));
    CHECK(y.coeff(5) == Rat(125, 24));
}

TEST_CASE("gamma on the positive reals") {
    CHECK(gamma_real(0.5) * gamma_real(0.5) ==
          doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    for (double x : {0.1, 0.3, 1.7, 6.4, 11.25})
        CHECK(gamma_real(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    // reflection through the sine product
    CHECK(gamma_real(0.3) * gamma_real(0.7) * std::sin(0.3 * M_PI) / M_PI ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gamma as the certified integral") {
    const auto rep = master_theorem_check(0.5, 1e-7);
    CHECK(rep.pass);
    CHECK(rep.integral == doctest::Approx(rep.gamma).epsilon(1e-6));
}

TEST_CASE("square-root asymptotics of the front sum") {
    // |Q(n) - sqrt(pi n / 2) + 1/3| stays below 1/sqrt(n)
    for (long n : {25L, 100L})
        CHECK(std::fabs(q_asymptotic_deviation(n)) <
              1.0 / std::sqrt(static_cast<double>(n)));
}

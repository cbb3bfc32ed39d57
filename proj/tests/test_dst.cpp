#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "qcomb/dst.hpp"
#include "qcomb/numerics.hpp"

using namespace qcomb;
using namespace qcomb::dst;

TEST_CASE("nine keys, four endnodes") {
    DSTree t;
    for (const char* key : {"1001", "0110", "0000", "1111", "0100", "0101",
                            "1101", "1110", "1100"})
        t.insert(std::string(key));
    CHECK(t.size() == 9);
    CHECK(t.count_endnodes() == 4);
}

TEST_CASE("degenerate trees") {
    DSTree t;
    CHECK(t.count_endnodes() == 0);
    t.insert("");
    CHECK(t.count_endnodes() == 1);
    CHECK_THROWS(t.insert(""));  // no bits left to route the second key
    t.insert("1");
    CHECK(t.count_endnodes() == 1);
}

TEST_CASE("endnode distribution polynomials") {
    const Series f0 = endnode_poly(0);
    CHECK(f0.coeff(0) == Rat(1));
    const Series f2 = endnode_poly(2);
    CHECK(f2.coeff(1) == Rat(1));
    const Series f3 = endnode_poly(3);
    CHECK(f3.coeff(1) == Rat(1, 2));
    CHECK(f3.coeff(2) == Rat(1, 2));
}

TEST_CASE("mean endnode count, four routes") {
    CHECK(ell_recurrence(0) == Rat(0));
    CHECK(ell_recurrence(1) == Rat(1));
    CHECK(ell_recurrence(2) == Rat(1));
    CHECK(ell_recurrence(3) == Rat(3, 2));
    CHECK(ell_closed(2) == Rat(1));
    CHECK(ell_closed(3) == Rat(3, 2));
    CHECK(ell_closed(10) == ell_recurrence(10));
    CHECK(ell_from_hat(10) == ell_recurrence(10));
}

TEST_CASE("poisson-transformed means") {
    CHECK(ell_hat_iter(0) == Rat(0));
    CHECK(ell_hat_iter(1) == Rat(1));
    CHECK(ell_hat_iter(2) == Rat(-1));
    CHECK(ell_hat_iter(3) == Rat(3, 2));
    CHECK(ell_hat_closed(2) == Rat(-1));
    CHECK(ell_hat_closed(3) == Rat(3, 2));
}

TEST_CASE("analytic continuation hits the exact values") {
    const double alpha = alpha_constant(1e-13);
    for (long n : {1L, 3L, 5L}) {
        const double via_star = static_cast<double>(n) + 1.0 - alpha +
                                r_star_partial_fraction(static_cast<double>(n), 1e-12);
        CHECK(std::fabs(r_exact(n).to_double() - via_star) < 1e-9);
    }
}

TEST_CASE("both analytic continuation series agree off the integers") {
    for (double z : {-1.0, -0.5, 0.7, 2.0}) {
        CHECK(r_star_product_form(z, 1e-9) ==
              doctest::Approx(r_star_partial_fraction(z, 1e-9)).epsilon(1e-8));
    }
    CHECK_THROWS(r_star_product_form(-2.0, 1e-9));
    CHECK_THROWS(r_star_partial_fraction(-3.0, 1e-9));
}

TEST_CASE("linear growth constant") {
    CHECK(endnode_constant(1e-12) ==
          doctest::Approx(0.3720486812).epsilon(1e-8));
    CHECK((ell_closed(1024) / Rat(1024)).to_double() ==
          doctest::Approx(0.372048).epsilon(1e-2));
}

TEST_CASE("partition identities at one half") {
    const auto rep = euler_identity_checks(1e-13);
    CHECK(rep.lhs_unit == doctest::Approx(rep.rhs_unit).epsilon(1e-12));
    CHECK(rep.lhs_alpha == doctest::Approx(rep.rhs_alpha).epsilon(1e-12));
    CHECK(rep.lhs_third == doctest::Approx(rep.rhs_third).epsilon(1e-12));
}

TEST_CASE("dst simulation is partition independent") {
    const auto a = simulate_dst(9, 3000, 2024, 1);
    const auto b = simulate_dst(9, 3000, 2024, 4);
    CHECK(a == b);
}

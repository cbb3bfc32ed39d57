#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "qcomb/digits.hpp"
#include "qcomb/numerics.hpp"
#include "qcomb/perron.hpp"

using namespace qcomb;
using namespace qcomb::digits;

TEST_CASE("dyadic valuation and digit sum") {
    CHECK(v2(1) == 0);
    CHECK(v2(12) == 2);
    CHECK(v2(96) == 5);
    CHECK(s2(4) == 1);
    CHECK(s2(7) == 3);
    CHECK(s2(255) == 8);
}

TEST_CASE("digit-sum running total and its fluctuation") {
    CHECK(delange_sum(1) == 0);
    CHECK(delange_sum(4) == 4);   // 0 + 1 + 1 + 2
    CHECK(delange_sum(8) == 12);
    // the centered fluctuation repeats exactly at powers of two
    const double f = delange_F(2);
    for (int j = 2; j <= 12; ++j)
        CHECK(delange_F(std::uint64_t{1} << j) == f);
}

TEST_CASE("sign from the odd part mod 4") {
    CHECK(theta_sign(1) == 1);
    CHECK(theta_sign(3) == -1);
    CHECK(theta_sign(6) == -1);
    CHECK(theta_sign(12) == -1);
    CHECK(theta_sign(20) == 1);  // odd part 5
}

TEST_CASE("gray code expansion") {
    const std::vector<int> g6 = gray_bits(6);  // 6 -> 101
    REQUIRE(g6.size() == 3);
    CHECK(g6[0] == 1);
    CHECK(g6[1] == 0);
    CHECK(g6[2] == 1);
    CHECK(s_gray(6) == 2);
    CHECK(gray_bits(0).empty());
    CHECK(s_gray(0) == 0);
}

TEST_CASE("gray code agrees with the xor construction") {
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        const std::uint64_t ref = n ^ (n >> 1);
        const auto bits = gray_bits(n);
        std::uint64_t packed = 0;
        for (std::size_t i = 0; i < bits.size(); ++i)
            packed |= static_cast<std::uint64_t>(bits[i]) << i;
        CHECK(packed == ref);
    }
}

TEST_CASE("gray telescoping identities hold on a prefix") {
    const auto rep = gray_telescope_check(2000);
    CHECK(rep.pass);
}

TEST_CASE("signed central binomial sums") {
    CHECK(merge_sum(1) == 1);
    CHECK(merge_sum(2) == 5);
    // n = 3: C(6,2) + C(6,1) - C(6,0), theta signs 1, 1, -1
    CHECK(merge_sum(3) == Int(15 + 6 - 1));
}

TEST_CASE("finite Dirichlet left-hand sums") {
    perron::Coeffs one{{1, Rat(1)}};
    CHECK(perron::perron_lhs(one, 4, 1) == Rat(3, 4));
    CHECK(perron::perron_lhs(one, 2, 0) == Rat(1));
    perron::Coeffs at2{{2, Rat(1)}};
    CHECK(perron::perron_lhs(at2, 2, 1) == Rat(0));
    CHECK(perron::perron_lhs(at2, 2, 0) == Rat(1, 2));  // half term at k = n
}

TEST_CASE("contour integral reproduces a simple case") {
    perron::Coeffs one{{1, Rat(1)}};
    auto res = perron::perron_rhs_numeric(one, 4, 1, 1.0, 64.0, 1e-6);
    if (!res.certified)  // widen the window until the tail bound certifies
        res = perron::perron_rhs_numeric(one, 4, 1, 1.0, res.suggested_T, 1e-6);
    CHECK(res.certified);
    CHECK(res.value == doctest::Approx(0.75).epsilon(2e-6));
}

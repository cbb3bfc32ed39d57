#include "doctest.h"

#include <cmath>

#include "qcomb/level_seq.hpp"

using namespace qcomb;
using namespace qcomb::levels;

TEST_CASE("counting level sequences, small values") {
    const long want[9] = {0, 1, 1, 2, 3, 5, 9, 16, 28};
    for (long n = 1; n <= 8; ++n) CHECK(count_dp(n) == want[n]);
}

TEST_CASE("slice iteration accumulates the same counts") {
    const auto acc = slice_counts(16);
    for (int n = 1; n <= 16; ++n) CHECK(acc[n] == count_dp(n));
}

TEST_CASE("closed-form quotient expands to the counts") {
    const Series g = gf_closed(16);
    CHECK(g.coeff(0) == Rat(0));
    for (int n = 1; n <= 16; ++n) CHECK(g.coeff(n) == Rat(count_dp(n)));
}

TEST_CASE("height-2 slice state by hand") {
    // sequences 1,1,...: after two slices the state tracks (total, last)
    SliceState s = slice_iterate(slice_initial(8, 8));
    CHECK(s.height == 2);
    CHECK(s.f.coeff(2, 1) == Rat(1));  // 1,1
    CHECK(s.f.coeff(3, 2) == Rat(1));  // 1,2
    CHECK(s.f.coeff(4, 3) == Rat(0));  // 1,3 is not admissible
}

TEST_CASE("denominator sign change brackets the dominant pole") {
    CHECK(gf_denominator_at(0.3, 1e-12) > 0.0);
    CHECK(gf_denominator_at(0.6, 1e-12) < 0.0);
    const double pole = dominant_pole(1e-10);
    CHECK(pole == doctest::Approx(0.5573678719).epsilon(1e-7));
    CHECK(gf_denominator_at(pole, 1e-12) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
}

TEST_CASE("growth fit matches the pole") {
    const auto fit = growth_fit(40, 1e-10);
    CHECK(fit.pole == doctest::Approx(dominant_pole(1e-10)).epsilon(1e-12));
    CHECK(fit.rate == doctest::Approx(1.0 / fit.pole).epsilon(1e-2));
}

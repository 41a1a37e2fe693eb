#include <doctest.h>

#include <bit>
#include <cmath>

#include "cubefun/constructs.hpp"
#include "cubefun/errors.hpp"
#include "cubefun/influence.hpp"
#include "cubefun/level_profile.hpp"

using namespace cubefun;

TEST_CASE("characters") {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        const CubeFunction chi = character(mask, 4);
        const int w = std::popcount(mask);
        const PropertyFlags flags = classify(chi);
        CHECK(flags.boolean_valued);
        CHECK(flags.degree == w);
        // sensitivity is |S| everywhere
        for (double v : sensitivity_field(chi).delta_values) {
            CHECK(v == doctest::Approx(w).epsilon(1e-12));
        }
    }
}

TEST_CASE("f4 and its degree lifts") {
    const CubeFunction f4 = example_f4();
    const PropertyFlags flags = classify(f4);
    CHECK(flags.boolean_valued);
    CHECK(flags.homogeneous);
    CHECK(flags.degree == 2);
    CHECK(total_influence_p(f4, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    for (double v : sensitivity_field(f4).delta_values) {
        CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
    }

    for (int d = 2; d <= 6; ++d) {
        const CubeFunction f = example_f4_times_character(d);
        const PropertyFlags fl = classify(f);
        CHECK(fl.boolean_valued);
        CHECK(fl.homogeneous);
        CHECK(fl.degree == d);
        for (double v : sensitivity_field(f).delta_values) {
            CHECK(v == doctest::Approx(d).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(example_f4_times_character(1), SizeError);
    CHECK_THROWS_AS(example_f4_times_character(23), SizeError);
}

TEST_CASE("quadratics with flat sensitivity") {
    for (const CubeFunction& f : {example_quad_s(), example_quad_t()}) {
        CHECK(f.sup_norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(classify(f).degree == 2);
        for (double v : sensitivity_field(f).delta_values) {
            CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("homogeneous counterexample") {
    const CubeFunction c2 = homogeneous_counterexample(2);
    CHECK(classify(c2).homogeneous);
    CHECK(classify(c2).degree == 2);
    CHECK(sensitivity_field(c2).delta_values[0] == doctest::Approx(2.0).epsilon(1e-12));

    // closed form matches the dense computation where both exist
    for (int block = 1; block <= 8; ++block) {
        const CubeFunction cb = homogeneous_counterexample(block);
        CHECK(counterexample_delta_at_one(block) ==
              doctest::Approx(sensitivity_field(cb).delta_values[0]).epsilon(1e-12));
    }
    CHECK(counterexample_delta_at_one(2) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(counterexample_delta_at_one(50) == doctest::Approx(3.92).epsilon(1e-10));
    CHECK_THROWS_AS(homogeneous_counterexample(13), SizeError);
}

TEST_CASE("majority") {
    const CubeFunction maj = majority(3);
    // spelled-out table: +1 iff at most one coordinate is -1
    for (std::size_t idx = 0; idx < 8; ++idx) {
        const int w = std::popcount(static_cast<std::uint32_t>(idx));
        CHECK(maj.at(idx) == (w <= 1 ? 1.0 : -1.0));
    }
    CHECK_THROWS_AS(majority(4), SizeError);
    CHECK_THROWS_AS(majority(-1), SizeError);
}

TEST_CASE("named examples") {
    CHECK(named_example("f4").n == 4);
    CHECK(named_example("quad_s").n == 4);
    CHECK(named_example("quad_t").n == 4);
    CHECK(named_example("f4_times_character", 3).n == 5);
    CHECK(named_example("homogeneous_counterexample", 2).n == 4);
    CHECK(named_example("majority", 5).n == 5);
    CHECK_THROWS_AS(named_example("nope"), UnknownName);
}

TEST_CASE("chebyshev symmetric profile") {
    const LevelProfile lp = chebyshev_symmetric(3, 100);
    CHECK(lp.n == 100);
    const UniPoly p = to_univariate(lp);
    const UniPoly t3 = chebyshev(3);
    for (std::size_t k = 0; k < t3.coeffs.size(); ++k) {
        CHECK(p.coeffs[k] == doctest::Approx(t3.coeffs[k]).epsilon(1e-8));
    }
    CHECK_THROWS_AS(chebyshev_symmetric(3, 8), BadParam);
    CHECK_THROWS_AS(chebyshev_symmetric(0, 100), BadParam);
}

TEST_CASE("monotone extremal polynomial") {
    for (int d = 1; d <= 10; ++d) {
        const MonotoneExtremal ex = klurman_monotone_extremal(d);
        REQUIRE(!ex.candidates.empty());
        for (const auto& [label, p] : ex.candidates) {
            CHECK(p.degree(1e-10) <= d);
            CHECK(sup_norm(p) == doctest::Approx(1.0).epsilon(1e-9));
            // monotone: derivative nonnegative on a grid
            const UniPoly dp = p.derivative();
            for (int g = 0; g <= 500; ++g) {
                CHECK(dp.eval(-1.0 + 2.0 * g / 500.0) >= -1e-9);
            }
        }
        // attains the kernel bound at 0
        CHECK(ex.best_derivative_at_zero ==
              doctest::Approx(klurman_derivative_bound(d, 0.0)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(klurman_monotone_extremal(31), TooLarge);
    CHECK_THROWS_AS(klurman_monotone_extremal(0), BadParam);
}

#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "cubefun/bounds.hpp"
#include "cubefun/constructs.hpp"
#include "cubefun/errors.hpp"
#include "cubefun/influence.hpp"

using namespace cubefun;

TEST_CASE("discrete derivative") {
    const CubeFunction dict = from_truth_table(1, {1.0, -1.0});
    const CubeFunction d1 = discrete_derivative(dict, 1);
    CHECK(d1.at(0) == doctest::Approx(1.0));
    CHECK(d1.at(1) == doctest::Approx(-1.0));

    // chi_{1,2}: f_1 = x2 in absolute value 1 everywhere
    const CubeFunction chi = character(0b11, 2);
    const CubeFunction c1 = discrete_derivative(chi, 1);
    for (std::size_t idx = 0; idx < 4; ++idx) CHECK(std::abs(c1.at(idx)) == doctest::Approx(1.0));

    // majority: derivative is 0 or +-1, nonzero with probability 1/2
    const CubeFunction maj = majority(3);
    const CubeFunction m1 = discrete_derivative(maj, 1);
    CHECK(m1.l1_norm() == doctest::Approx(0.5));

    CHECK_THROWS_AS(discrete_derivative(dict, 0), IndexOutOfRange);
    CHECK_THROWS_AS(discrete_derivative(dict, 2), IndexOutOfRange);
}

TEST_CASE("influence values on pinned examples") {
    const CubeFunction maj = majority(3);
    // Boolean function: influence is p-independent
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
        CHECK(influence_p(maj, 1, p) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(total_influence_p(maj, p) == doctest::Approx(1.5).epsilon(1e-12));
    }

    const CubeFunction chi = character(0b1011, 4);
    CHECK(total_influence_p(chi, 1.0) == doctest::Approx(3.0));
    CHECK(influence_p(chi, 3, 2.0) == doctest::Approx(0.0));

    CHECK(total_influence_p(example_f4(), 1.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sensitivity field") {
    // characters: Delta = |S| at every point
    const CubeFunction chi = character(0b111, 3);
    const SensitivityField sf = sensitivity_field(chi);
    for (double v : sf.delta_values) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sf.max() == doctest::Approx(3.0));
    CHECK(sf.mean() == doctest::Approx(3.0));

    const SensitivityField sq = sensitivity_field(example_quad_s());
    for (double v : sq.delta_values) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));

    // counterexample with block 2: Delta at the all-ones point is 2
    const SensitivityField sc = sensitivity_field(homogeneous_counterexample(2));
    CHECK(sc.delta_values[0] == doctest::Approx(2.0).epsilon(1e-12));

    // mean of the field equals total L1 influence
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> table(64);
    for (double& v : table) v = gauss(rng);
    const CubeFunction f = from_truth_table(6, std::move(table));
    CHECK(sensitivity_field(f).mean() == doctest::Approx(total_influence_p(f, 1.0)).epsilon(1e-10));
    for (double v : sensitivity_field(f).delta_values) CHECK(v >= 0.0);
}

TEST_CASE("laplacian") {
    const CubeFunction chi = character(0b110, 3);
    const CubeFunction lchi = laplacian(chi);
    for (std::size_t idx = 0; idx < 8; ++idx) {
        CHECK(lchi.at(idx) == doctest::Approx(2.0 * chi.at(idx)).epsilon(1e-12));
    }

    const CubeFunction one = from_truth_table(2, std::vector<double>(4, 1.0));
    for (double v : laplacian(one).values) CHECK(v == doctest::Approx(0.0));

    // Fourier coefficients scale by |S|
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> table(32);
    for (double& v : table) v = gauss(rng);
    const CubeFunction f = from_truth_table(5, std::move(table));
    const CubeFunction lap = laplacian(f);
    const FourierExpansion& lf = lap.fourier();
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
        const int w = std::popcount(mask);
        CHECK(lf.at(mask) == doctest::Approx(w * f.fourier().at(mask)).epsilon(1e-10));
    }
}

TEST_CASE("variance") {
    const CubeFunction dict = from_truth_table(1, {1.0, -1.0});
    CHECK(variance_p(dict, 2.0) == doctest::Approx(1.0));
    CHECK(variance_p(dict, 1.0) == doctest::Approx(1.0));

    const CubeFunction biased = from_truth_table(2, {1.0, 1.0, 1.0, -1.0});
    // mean 1/2; E|f - 1/2|^2 = 3/4
    CHECK(variance_p(biased, 2.0) == doctest::Approx(0.75));

    const CubeFunction one = from_truth_table(3, std::vector<double>(8, 4.0));
    CHECK(variance_p(one, 1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(variance_p(dict, 0.5), BadExponent);
}

TEST_CASE("influence invariants on random functions") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<double> table(std::size_t{1} << n);
        for (double& v : table) v = gauss(rng);
        const CubeFunction f = from_truth_table(n, std::move(table));

        // spectral identity for p = 2
        double spectral = 0.0;
        for (std::size_t mask = 0; mask < f.size(); ++mask) {
            const int w = std::popcount(static_cast<std::uint32_t>(mask));
            spectral += w * f.fourier().coeffs[mask] * f.fourier().coeffs[mask];
        }
        CHECK(total_influence_p(f, 2.0) == doctest::Approx(spectral).epsilon(1e-9));

        // derivative norm bounded by the function norm
        for (int i = 1; i <= n; ++i) {
            CHECK(discrete_derivative(f, i).l1_norm() <= f.l1_norm() + 1e-12);
        }
    }

    // Holder monotonicity in p for bounded functions
    for (int trial = 0; trial < 20; ++trial) {
        const CubeFunction f = random_bounded(6, 3, 100 + trial);
        double prev = total_influence_p(f, 1.0);
        for (double p : {1.25, 1.5, 1.75, 2.0}) {
            const double cur = total_influence_p(f, p);
            CHECK(cur <= prev + 1e-10);
            prev = cur;
        }
    }
}

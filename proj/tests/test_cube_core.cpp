#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "cubefun/constructs.hpp"
#include "cubefun/cube_function.hpp"
#include "cubefun/errors.hpp"

using namespace cubefun;

namespace {

// brute-force Fourier coefficient E[f chi_S]
double naive_coeff(const CubeFunction& f, std::uint32_t s_mask) {
    double s = 0.0;
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        const int par = std::popcount(static_cast<std::uint32_t>(idx) & s_mask) % 2;
        s += (par ? -1.0 : 1.0) * f.values[idx];
    }
    return s / static_cast<double>(f.size());
}

CubeFunction random_function(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> table(std::size_t{1} << n);
    for (double& v : table) v = gauss(rng);
    return from_truth_table(n, std::move(table));
}

}  // namespace

TEST_CASE("from_truth_table validation") {
    const CubeFunction dict = from_truth_table(1, {1.0, -1.0});
    CHECK(dict.at(0) == 1.0);  // index 0 is the all-ones point
    CHECK(dict.fourier().at(1) == doctest::Approx(1.0));
    CHECK(dict.fourier().at(0) == doctest::Approx(0.0));

    CHECK_THROWS_AS(from_truth_table(0, {}), BadParam);
    CHECK_THROWS_AS(from_truth_table(25, std::vector<double>(8, 0.0)), TooLarge);
    CHECK_THROWS_AS(from_truth_table(2, {1.0, 2.0, 3.0}), LengthMismatch);
    CHECK_THROWS_AS(from_truth_table(1, {1.0, std::nan("")}), NonFinite);
}

TEST_CASE("fourier of pinned examples") {
    // x1 x2 on two variables
    const CubeFunction f = from_truth_table(2, {1.0, -1.0, -1.0, 1.0});
    const FourierExpansion& e = f.fourier();
    CHECK(e.at(0b11) == doctest::Approx(1.0));
    CHECK(e.at(0b00) == doctest::Approx(0.0));
    CHECK(e.at(0b01) == doctest::Approx(0.0));
    CHECK(e.at(0b10) == doctest::Approx(0.0));
    CHECK(e.degree() == 2);

    // majority of three: singletons 1/2, full set -1/2
    const CubeFunction maj = majority(3);
    const FourierExpansion& em = maj.fourier();
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        const int w = std::popcount(mask);
        const double expected = w == 1 ? 0.5 : (w == 3 ? -0.5 : 0.0);
        CHECK(em.at(mask) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(em.at(mask) == doctest::Approx(naive_coeff(maj, mask)).epsilon(1e-12));
    }

    // constant
    const CubeFunction one = from_truth_table(3, std::vector<double>(8, 2.5));
    CHECK(one.fourier().at(0) == doctest::Approx(2.5));
    CHECK(one.fourier().degree() == 0);
}

TEST_CASE("transform round trip, parseval, linearity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const CubeFunction f = random_function(n, rng);
        const CubeFunction back = synthesize(f.fourier());
        double l2 = 0.0;
        for (std::size_t idx = 0; idx < f.size(); ++idx) {
            CHECK(back.at(idx) == doctest::Approx(f.at(idx)).epsilon(1e-12));
            l2 += f.at(idx) * f.at(idx);
        }
        l2 /= static_cast<double>(f.size());
        CHECK(f.fourier().parseval_sum() == doctest::Approx(l2).epsilon(1e-10));
    }

    // linearity of the transform
    const int n = 6;
    const CubeFunction a = random_function(n, rng);
    const CubeFunction b = random_function(n, rng);
    std::vector<double> combo(a.values);
    for (std::size_t idx = 0; idx < combo.size(); ++idx) {
        combo[idx] = 2.0 * a.at(idx) - 3.0 * b.at(idx);
    }
    const CubeFunction c = from_truth_table(n, std::move(combo));
    for (std::size_t mask = 0; mask < c.size(); ++mask) {
        CHECK(c.fourier().coeffs[mask] ==
              doctest::Approx(2.0 * a.fourier().coeffs[mask] - 3.0 * b.fourier().coeffs[mask])
                  .epsilon(1e-11));
    }
}

TEST_CASE("fourier coefficients match the brute-force inner product") {
    std::mt19937_64 rng(5);
    const CubeFunction f = random_function(5, rng);
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
        CHECK(f.fourier().at(mask) == doctest::Approx(naive_coeff(f, mask)).epsilon(1e-11));
    }
}

TEST_CASE("classify") {
    const CubeFunction chi = character(0b101, 3);
    const PropertyFlags pc = classify(chi);
    CHECK(pc.boolean_valued);
    CHECK(pc.bounded_by_one);
    CHECK(pc.homogeneous);
    CHECK(pc.degree == 2);
    CHECK_FALSE(pc.monotone);
    CHECK(pc.sup_norm == doctest::Approx(1.0));

    const PropertyFlags pm = classify(majority(3));
    CHECK(pm.boolean_valued);
    CHECK(pm.symmetric);
    CHECK(pm.monotone);
    CHECK_FALSE(pm.homogeneous);
    CHECK(pm.degree == 3);

    // character degree equals the set size
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
        CHECK(classify(character(mask, 5)).degree == std::popcount(mask));
    }

    const CubeFunction half = from_truth_table(1, {0.5, 0.5});
    const PropertyFlags ph = classify(half);
    CHECK_FALSE(ph.boolean_valued);
    CHECK(ph.bounded_by_one);
    CHECK(ph.symmetric);
    CHECK(ph.degree == 0);
}

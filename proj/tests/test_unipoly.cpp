#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "cubefun/errors.hpp"
#include "cubefun/unipoly.hpp"

using namespace cubefun;

namespace {

// Gauss-Legendre nodes/weights via Newton on P_n, test-side only
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double integrate(const std::function<double(double)>& f) {
    static std::vector<double> nodes, weights;
    if (nodes.empty()) gauss_legendre(64, nodes, weights);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
}

}  // namespace

TEST_CASE("unipoly arithmetic and calculus") {
    UniPoly p{{1.0, -2.0, 3.0}};  // 1 - 2x + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(2.0) == doctest::Approx(9.0));
    CHECK(p.derivative().eval(1.0) == doctest::Approx(4.0));
    CHECK(p.antiderivative().eval(0.0) == doctest::Approx(0.0));
    CHECK(p.antiderivative().derivative().eval(0.7) == doctest::Approx(p.eval(0.7)));

    UniPoly q{{0.0, 1.0}};
    CHECK((p * q).eval(1.5) == doctest::Approx(p.eval(1.5) * 1.5));
    CHECK((p + q).eval(-0.3) == doctest::Approx(p.eval(-0.3) - 0.3));
    CHECK((p - p).is_zero());
    CHECK(UniPoly::zero().degree() == -1);
    CHECK(UniPoly::identity().eval(0.25) == doctest::Approx(0.25));
}

TEST_CASE("chebyshev polynomials") {
    const UniPoly t3 = chebyshev(3);
    REQUIRE(t3.coeffs.size() == 4);
    CHECK(t3.coeffs[0] == doctest::Approx(0.0));
    CHECK(t3.coeffs[1] == doctest::Approx(-3.0));
    CHECK(t3.coeffs[2] == doctest::Approx(0.0));
    CHECK(t3.coeffs[3] == doctest::Approx(4.0));
    CHECK(t3.eval(0.5) == doctest::Approx(-1.0));

    for (int d = 1; d <= 10; ++d) {
        CHECK(chebyshev(d).derivative().eval(1.0) == doctest::Approx(d * d));
    }
    for (int d = 0; d <= 20; ++d) {
        CHECK(sup_norm(chebyshev(d)) == doctest::Approx(1.0).epsilon(1e-8));
    }
    // trig identity at sample angles
    for (int d = 2; d <= 8; ++d) {
        for (double th : {0.3, 1.1, 2.5}) {
            CHECK(chebyshev(d).eval(std::cos(th)) == doctest::Approx(std::cos(d * th)));
        }
    }
}

TEST_CASE("jacobi polynomials") {
    CHECK(jacobi(0, 0.0, 0.0).eval(0.4) == doctest::Approx(1.0));
    // J_1^{0,0} = x
    CHECK(jacobi(1, 0.0, 0.0).eval(0.37) == doctest::Approx(0.37));
    // J_1^{0,1} = (3x - 1) / 2
    CHECK(jacobi(1, 0.0, 1.0).eval(0.6) == doctest::Approx((3 * 0.6 - 1) / 2));

    // recurrence evaluation agrees with the explicit expansion
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int d = 0; d <= 10; ++d) {
        for (int trial = 0; trial < 5; ++trial) {
            const double x = unit(rng);
            CHECK(jacobi(d, 0.5, 1.5).eval(x) ==
                  doctest::Approx(jacobi_value(d, 0.5, 1.5, x)).epsilon(1e-10));
        }
    }

    // Legendre orthogonality and norms
    const UniPoly j2 = jacobi(2, 0.0, 0.0);
    const UniPoly j3 = jacobi(3, 0.0, 0.0);
    CHECK(integrate([&](double x) { return j2.eval(x) * j3.eval(x); }) ==
          doctest::Approx(0.0).epsilon(1e-8));
    for (int d = 0; d <= 6; ++d) {
        CHECK(jacobi_squared_norm(d, 0.0, 0.0) == doctest::Approx(2.0 / (2 * d + 1)));
        const UniPoly jd = jacobi(d, 0.0, 1.0);
        CHECK(integrate([&](double x) { return (1.0 + x) * jd.eval(x) * jd.eval(x); }) ==
              doctest::Approx(jacobi_squared_norm(d, 0.0, 1.0)).epsilon(1e-9));
    }

    // chebyshev(d) is proportional to jacobi(d, -1/2, -1/2)
    for (int d = 1; d <= 10; ++d) {
        const UniPoly t = chebyshev(d);
        const UniPoly j = jacobi(d, -0.5, -0.5);
        const double scale = t.coeffs.back() / j.coeffs.back();
        for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
            CHECK(t.coeffs[k] == doctest::Approx(scale * j.coeffs[k]).epsilon(1e-8));
        }
    }

    CHECK_THROWS_AS(jacobi(2, -1.0, 0.0), Error);
}

TEST_CASE("klurman families") {
    const UniPoly s0 = klurman_family(KlurmanKind::S, 0);
    CHECK(s0.eval(0.3) == doctest::Approx(1.3));
    const UniPoly f0 = klurman_family(KlurmanKind::F, 0);
    CHECK(f0.eval(-0.8) == doctest::Approx(1.0));
    const UniPoly h1 = klurman_family(KlurmanKind::H, 1);
    CHECK(h1.eval(0.5) == doctest::Approx(0.75));
    CHECK_THROWS_AS(klurman_family(KlurmanKind::H, 0), Error);

    // nonnegative by construction
    for (int idx = 1; idx <= 6; ++idx) {
        for (KlurmanKind kind : {KlurmanKind::S, KlurmanKind::H, KlurmanKind::F}) {
            const UniPoly fam = klurman_family(kind, idx);
            for (int g = 0; g <= 1000; ++g) {
                const double x = -1.0 + 2.0 * g / 1000.0;
                CHECK(fam.eval(x) >= -1e-10);
            }
        }
    }

    // kernel form matches the raw family at small index after normalization check:
    // both are nonnegative and the kernel grows linearly while being finite
    CHECK(klurman_kernel_value(KlurmanKind::F, 0, 0.2) == doctest::Approx(0.5));

    // bound and reference relations
    for (int d = 1; d <= 12; ++d) {
        CHECK(klurman_reference(d) == doctest::Approx(klurman_derivative_bound(d, 0.0) / 2.0));
        CHECK(klurman_derivative_bound(d, 0.0) > 0.0);
    }
    // frozen extremal values: 2 * reference = M_d for small d
    const double m[] = {1.0, 1.0, 1.5, 1.5, 2.25, 2.25, 2.8125, 2.8125, 3.515625, 3.515625};
    for (int d = 1; d <= 10; ++d) {
        CHECK(klurman_derivative_bound(d, 0.0) == doctest::Approx(m[d - 1]).epsilon(1e-9));
    }
    // asymptotic ratio decreases toward 1/(2 pi)
    const double r8 = klurman_reference(8) / 8.0;
    const double r40 = klurman_reference(40) / 40.0;
    const double r200 = klurman_reference(200) / 200.0;
    CHECK(r8 > r40);
    CHECK(r40 > r200);
    CHECK(r200 == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(0.01));
}

TEST_CASE("sup_norm and extrema") {
    CHECK(sup_norm(UniPoly{{0.0, 0.0, 1.0}}) == doctest::Approx(1.0));
    // interior maximum: 1 - x^2 peaks at 0
    const Extrema e = extrema(UniPoly{{1.0, 0.0, -1.0}});
    CHECK(e.max == doctest::Approx(1.0));
    CHECK(e.min == doctest::Approx(0.0));

    // K_2 extremizer has sup norm exactly 1
    const double a = 0.5 + 0.5 / std::sqrt(2.0);
    UniPoly h{{-a, 1.0 / std::sqrt(2.0), a}};
    CHECK(sup_norm(h) == doctest::Approx(1.0).epsilon(1e-9));

    // custom interval
    CHECK(sup_norm(UniPoly::identity(), 1e-12, 1.0, 3.0) == doctest::Approx(3.0));
}

TEST_CASE("bernstein-markov bound") {
    CHECK(bernstein_markov_bound(3, 0.0) == doctest::Approx(3.0));
    CHECK(bernstein_markov_bound(3, 1.0) == doctest::Approx(9.0));
    CHECK(bernstein_markov_bound(3, -1.0) == doctest::Approx(9.0));
    CHECK(bernstein_markov_bound(3, 0.8) == doctest::Approx(5.0));

    // random normalized polynomials respect the bound pointwise
    std::mt19937_64 rng(2026);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = deg(rng);
        std::vector<double> c(d + 1);
        for (double& v : c) v = gauss(rng);
        UniPoly p{c};
        const double s = sup_norm(p);
        if (s <= 0.0) continue;
        p = p * (1.0 / s);
        const UniPoly dp = p.derivative();
        for (int g = 0; g <= 100; ++g) {
            const double x = -1.0 + 2.0 * g / 100.0;
            CHECK(std::abs(dp.eval(x)) <= bernstein_markov_bound(d, x) * (1.0 + 1e-8) + 1e-9);
        }
    }
}

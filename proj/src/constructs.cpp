#include "cubefun/constructs.hpp"

#include <bit>
#include <cmath>
#include <functional>

#include "cubefun/errors.hpp"

namespace cubefun {

namespace {

inline double coord(std::size_t idx, int k) {
    return (idx >> k) & 1 ? -1.0 : 1.0;
}

CubeFunction tabulate(int n, const std::function<double(std::size_t)>& fn) {
    CubeFunction f;
    f.n = n;
    f.values.resize(std::size_t{1} << n);
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) f.values[idx] = fn(idx);
    return f;
}

}  // namespace

CubeFunction character(std::uint32_t s_mask, int n) {
    if (n < 1 || n > kMaxVariables) throw SizeError("character: 1 <= n <= 24 required");
    return tabulate(n, [s_mask](std::size_t idx) {
        return std::popcount(static_cast<std::uint32_t>(idx) & s_mask) % 2 ? -1.0 : 1.0;
    });
}

CubeFunction example_f4() {
    return tabulate(4, [](std::size_t idx) {
        const double x = coord(idx, 0), y = coord(idx, 1), z = coord(idx, 2), w = coord(idx, 3);
        return (x * (z + w) + y * (z - w)) / 2.0;
    });
}

CubeFunction example_f4_times_character(int d) {
    if (d < 2) throw SizeError("f4_times_character: d >= 2 required");
    if (d + 2 > kMaxVariables) throw SizeError("f4_times_character: d + 2 > 24");
    return tabulate(d + 2, [d](std::size_t idx) {
        const double x = coord(idx, 0), y = coord(idx, 1), z = coord(idx, 2), w = coord(idx, 3);
        double v = (x * (z + w) + y * (z - w)) / 2.0;
        for (int k = 4; k < d + 2; ++k) v *= coord(idx, k);
        return v;
    });
}

CubeFunction example_quad_s() {
    const double c = (std::sqrt(2.0) - 1.0) / 8.0;
    return tabulate(4, [c](std::size_t idx) {
        const double x = coord(idx, 0), y = coord(idx, 1), z = coord(idx, 2), w = coord(idx, 3);
        return (x * y - z * w) / 2.0 + c * (x * z + y * w);
    });
}

CubeFunction example_quad_t() {
    const double c = (std::sqrt(2.0) - 1.0) / 16.0;
    return tabulate(4, [c](std::size_t idx) {
        const double x = coord(idx, 0), y = coord(idx, 1), z = coord(idx, 2), w = coord(idx, 3);
        return (x * y - z * w) / 2.0 + c * (x + y) * (z + w);
    });
}

namespace {

double counterexample_value(long long block, long long s1, long long s2) {
    const double b = static_cast<double>(block);
    const double a1 = static_cast<double>(s1) / b;
    const double a2 = static_cast<double>(s2) / b;
    return a1 * a1 - a2 * a2;
}

}  // namespace

CubeFunction homogeneous_counterexample(int block) {
    if (block < 1 || 2 * block > kMaxVariables) {
        throw SizeError("homogeneous_counterexample: 2 * block <= 24 required");
    }
    return tabulate(2 * block, [block](std::size_t idx) {
        long long s1 = 0, s2 = 0;
        for (int k = 0; k < block; ++k) s1 += (idx >> k) & 1 ? -1 : 1;
        for (int k = block; k < 2 * block; ++k) s2 += (idx >> k) & 1 ? -1 : 1;
        return counterexample_value(block, s1, s2);
    });
}

double counterexample_delta_at_one(long long block) {
    // all coordinates +1: s1 = s2 = block; flip one coordinate per block side
    const double f0 = counterexample_value(block, block, block);
    double delta = 0.0;
    delta += static_cast<double>(block) *
             std::abs(f0 - counterexample_value(block, block - 2, block)) / 2.0;
    delta += static_cast<double>(block) *
             std::abs(f0 - counterexample_value(block, block, block - 2)) / 2.0;
    return delta;
}

CubeFunction majority(int n) {
    if (n < 1 || n % 2 == 0) throw SizeError("majority: odd n required");
    if (n > kMaxVariables) throw SizeError("majority: n > 24");
    return tabulate(n, [n](std::size_t idx) {
        return 2 * std::popcount(static_cast<std::uint32_t>(idx)) < n ? 1.0 : -1.0;
    });
}

CubeFunction named_example(const std::string& name, int param) {
    if (name == "f4") return example_f4();
    if (name == "quad_s") return example_quad_s();
    if (name == "quad_t") return example_quad_t();
    if (name == "f4_times_character") return example_f4_times_character(param);
    if (name == "homogeneous_counterexample") return homogeneous_counterexample(param);
    if (name == "majority") return majority(param);
    throw UnknownName("named_example: " + name);
}

LevelProfile chebyshev_symmetric(int d, long long n) {
    if (d < 1) throw BadParam("chebyshev_symmetric: d >= 1 required");
    if (n < static_cast<long long>(d) * d) {
        throw BadParam("chebyshev_symmetric: n >= d^2 required");
    }
    return from_univariate(chebyshev(d), n);
}

MonotoneExtremal klurman_monotone_extremal(int d) {
    if (d < 1) throw BadParam("klurman_monotone_extremal: d >= 1 required");
    if (d > 30) {
        throw TooLarge("klurman_monotone_extremal: monomial coefficients unreliable past d = 30; "
                       "use klurman_reference for asymptotics");
    }
    // reproducing kernel at 0: r(x) = sum J_i(x) J_i(0) / h_i; the extremal
    // derivative density is weight(x) * r(x)^2 * 2 / r(0), which integrates
    // to 2 against dx and peaks at p'(0) = 2 r(0)
    auto kernel_at_zero = [](double a, double b, int count) {
        UniPoly r;
        for (int i = 0; i < count; ++i) {
            const UniPoly j = jacobi(i, a, b);
            r = r + j * (jacobi_value(i, a, b, 0.0) / jacobi_squared_norm(i, a, b));
        }
        return r;
    };
    auto finish = [&](const UniPoly& weight, double a, double b, int count) {
        const UniPoly r = kernel_at_zero(a, b, count);
        const UniPoly density = weight * r * r * (2.0 / r.eval(0.0));
        UniPoly p = density.antiderivative();
        const double lo = p.eval(-1.0);
        const double hi = p.eval(1.0);
        p = (p + UniPoly::constant(-(lo + hi) / 2.0)) * (2.0 / (hi - lo));
        return p;
    };

    MonotoneExtremal out;
    if (d % 2 == 0) {
        const int k = (d - 2) / 2;
        out.candidates.emplace_back("S", finish(UniPoly{{1.0, 1.0}}, 0.0, 1.0, k + 1));
    } else {
        const int k = (d - 1) / 2;
        out.candidates.emplace_back("F", finish(UniPoly::constant(1.0), 0.0, 0.0, k + 1));
        if (k >= 1) {
            out.candidates.emplace_back("H", finish(UniPoly{{1.0, 0.0, -1.0}}, 1.0, 1.0, k));
        }
    }
    for (const auto& [label, p] : out.candidates) {
        out.best_derivative_at_zero =
            std::max(out.best_derivative_at_zero, p.derivative().eval(0.0));
    }
    return out;
}

}  // namespace cubefun

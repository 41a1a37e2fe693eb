#include "cubefun/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cubefun/errors.hpp"

namespace cubefun {

int UniPoly::degree(double tol) const {
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
        if (std::abs(coeffs[j]) > tol) return j;
    }
    return -1;
}

double UniPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs.size() <= 1) return UniPoly{};
    std::vector<double> d(coeffs.size() - 1);
    for (size_t j = 1; j < coeffs.size(); ++j) {
        d[j - 1] = static_cast<double>(j) * coeffs[j];
    }
    return UniPoly{std::move(d)};
}

UniPoly UniPoly::antiderivative() const {
    std::vector<double> a(coeffs.size() + 1, 0.0);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        a[j + 1] = coeffs[j] / static_cast<double>(j + 1);
    }
    return UniPoly{std::move(a)};
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<double> r(std::max(coeffs.size(), o.coeffs.size()), 0.0);
    for (size_t j = 0; j < coeffs.size(); ++j) r[j] += coeffs[j];
    for (size_t j = 0; j < o.coeffs.size(); ++j) r[j] += o.coeffs[j];
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<double> r(std::max(coeffs.size(), o.coeffs.size()), 0.0);
    for (size_t j = 0; j < coeffs.size(); ++j) r[j] += coeffs[j];
    for (size_t j = 0; j < o.coeffs.size(); ++j) r[j] -= o.coeffs[j];
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return UniPoly{};
    std::vector<double> r(coeffs.size() + o.coeffs.size() - 1, 0.0);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        for (size_t k = 0; k < o.coeffs.size(); ++k) {
            r[j + k] += coeffs[j] * o.coeffs[k];
        }
    }
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::operator*(double s) const {
    std::vector<double> r(coeffs);
    for (double& c : r) c *= s;
    return UniPoly{std::move(r)};
}

void UniPoly::trim(double tol) {
    while (!coeffs.empty() && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

UniPoly chebyshev(int d) {
    if (d < 0) throw BadParam("chebyshev: negative degree");
    UniPoly prev{{1.0}};
    if (d == 0) return prev;
    UniPoly cur{{0.0, 1.0}};
    const UniPoly two_x{{0.0, 2.0}};
    for (int k = 1; k < d; ++k) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Binomial with real upper argument and integer lower: prod (a-k+t)/t.
double real_binomial(double a, int k) {
    double r = 1.0;
    for (int t = 1; t <= k; ++t) {
        r *= (a - static_cast<double>(k) + t) / t;
    }
    return r;
}

}  // namespace

UniPoly jacobi(int d, double alpha, double beta) {
    if (alpha <= -1.0 || beta <= -1.0) throw BadParam("jacobi: alpha, beta must exceed -1");
    if (d < 0) throw BadParam("jacobi: negative degree");
    const UniPoly x_minus_1{{-1.0, 1.0}};
    const UniPoly x_plus_1{{1.0, 1.0}};
    UniPoly sum;
    for (int j = 0; j <= d; ++j) {
        double c = real_binomial(d + alpha, j) * real_binomial(d + beta, d - j);
        if (c == 0.0) continue;
        UniPoly term = UniPoly::constant(c);
        for (int t = 0; t < d - j; ++t) term = term * x_minus_1;
        for (int t = 0; t < j; ++t) term = term * x_plus_1;
        sum = sum + term;
    }
    return sum * std::pow(2.0, -d);
}

double jacobi_value(int d, double alpha, double beta, double x) {
    if (alpha <= -1.0 || beta <= -1.0) throw BadParam("jacobi_value: alpha, beta must exceed -1");
    if (d < 0) throw BadParam("jacobi_value: negative degree");
    if (d == 0) return 1.0;
    double p0 = 1.0;
    double p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    for (int k = 2; k <= d; ++k) {
        const double ab = alpha + beta;
        const double c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        const double c2 = (2.0 * k + ab - 1.0) *
                          ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x + alpha * alpha - beta * beta);
        const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_squared_norm(int d, double alpha, double beta) {
    const double ab = alpha + beta;
    return std::pow(2.0, ab + 1.0) / (2.0 * d + ab + 1.0) *
           std::exp(std::lgamma(d + alpha + 1.0) + std::lgamma(d + beta + 1.0) -
                    std::lgamma(d + ab + 1.0) - std::lgamma(d + 1.0));
}

UniPoly klurman_family(KlurmanKind kind, int index) {
    if (index < 0) throw BadParam("klurman_family: negative index");
    switch (kind) {
        case KlurmanKind::S: {
            UniPoly sum;
            for (int i = 0; i <= index; ++i) {
                UniPoly j = jacobi(i, 0.0, 1.0);
                sum = sum + j * j;
            }
            return UniPoly{{1.0, 1.0}} * sum;
        }
        case KlurmanKind::H: {
            if (index < 1) throw BadParam("klurman_family: H requires index >= 1");
            UniPoly sum;
            for (int i = 0; i < index; ++i) {
                UniPoly j = jacobi(i, 1.0, 1.0);
                sum = sum + j * j;
            }
            return UniPoly{{1.0, 0.0, -1.0}} * sum;
        }
        case KlurmanKind::F: {
            UniPoly sum;
            for (int i = 0; i <= index; ++i) {
                UniPoly j = jacobi(i, 0.0, 0.0);
                sum = sum + j * j;
            }
            return sum;
        }
    }
    throw BadParam("klurman_family: unknown kind");
}

double klurman_kernel_value(KlurmanKind kind, int index, double x) {
    if (index < 0) throw BadParam("klurman_kernel_value: negative index");
    switch (kind) {
        case KlurmanKind::S: {
            double sum = 0.0;
            for (int i = 0; i <= index; ++i) {
                const double v = jacobi_value(i, 0.0, 1.0, x);
                sum += v * v / jacobi_squared_norm(i, 0.0, 1.0);
            }
            return (1.0 + x) * sum;
        }
        case KlurmanKind::H: {
            if (index < 1) throw BadParam("klurman_kernel_value: H requires index >= 1");
            double sum = 0.0;
            for (int i = 0; i < index; ++i) {
                const double v = jacobi_value(i, 1.0, 1.0, x);
                sum += v * v / jacobi_squared_norm(i, 1.0, 1.0);
            }
            return (1.0 - x * x) * sum;
        }
        case KlurmanKind::F: {
            double sum = 0.0;
            for (int i = 0; i <= index; ++i) {
                const double v = jacobi_value(i, 0.0, 0.0, x);
                sum += v * v / jacobi_squared_norm(i, 0.0, 0.0);
            }
            return sum;
        }
    }
    throw BadParam("klurman_kernel_value: unknown kind");
}

double klurman_derivative_bound(int d, double x0) {
    if (d < 1) throw BadParam("klurman_derivative_bound: d >= 1 required");
    if (d % 2 == 0) {
        const int k = (d - 2) / 2;
        return 2.0 * std::max(klurman_kernel_value(KlurmanKind::S, k, x0),
                              klurman_kernel_value(KlurmanKind::S, k, -x0));
    }
    const int k = (d - 1) / 2;
    double f = klurman_kernel_value(KlurmanKind::F, k, x0);
    double h = (k >= 1) ? klurman_kernel_value(KlurmanKind::H, k, x0) : 0.0;
    return 2.0 * std::max(f, h);
}

double klurman_reference(int d) { return klurman_derivative_bound(d, 0.0) / 2.0; }

namespace {

double bisect_root(const UniPoly& p, double a, double b, double fa, double tol) {
    // fa and p(b) have opposite signs
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = p.eval(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

Extrema extrema(const UniPoly& p, double tol, double lo, double hi) {
    const int deg = p.degree();
    Extrema e{p.eval(lo), p.eval(lo)};
    auto consider = [&](double x) {
        const double v = p.eval(x);
        e.min = std::min(e.min, v);
        e.max = std::max(e.max, v);
    };
    consider(hi);
    if (deg <= 1) return e;

    const UniPoly dp = p.derivative();
    const int grid = std::max(64, 32 * deg);
    std::vector<double> xs(grid + 1);
    for (int i = 0; i <= grid; ++i) {
        // Chebyshev nodes mapped into [lo, hi]
        const double c = std::cos(M_PI * i / grid);
        xs[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * c;
    }
    std::sort(xs.begin(), xs.end());
    double prev_x = xs[0];
    double prev_f = dp.eval(prev_x);
    consider(prev_x);
    for (int i = 1; i <= grid; ++i) {
        const double x = xs[i];
        const double fx = dp.eval(x);
        consider(x);
        if ((prev_f < 0.0) != (fx < 0.0)) {
            consider(bisect_root(dp, prev_x, x, prev_f, tol * std::max(1.0, hi - lo)));
        }
        prev_x = x;
        prev_f = fx;
    }
    return e;
}

double sup_norm(const UniPoly& p, double tol, double lo, double hi) {
    const Extrema e = extrema(p, tol, lo, hi);
    return std::max(std::abs(e.min), std::abs(e.max));
}

double bernstein_markov_bound(int d, double x) {
    if (std::abs(x) > 1.0) throw BadParam("bernstein_markov_bound: |x| <= 1 required");
    const double dd = static_cast<double>(d);
    const double one_minus = 1.0 - x * x;
    if (one_minus <= 0.0) return dd * dd;
    return std::min(dd * dd, dd / std::sqrt(one_minus));
}

std::string to_string(const UniPoly& p) {
    std::ostringstream os;
    os << "[";
    for (size_t j = 0; j < p.coeffs.size(); ++j) {
        if (j) os << ", ";
        os << p.coeffs[j];
    }
    os << "]";
    return os.str();
}

}  // namespace cubefun

#include "cubefun/cube_function.hpp"

#include <bit>
#include <cmath>

#include "cubefun/errors.hpp"

namespace cubefun {

int FourierExpansion::degree(double tol) const {
    int deg = 0;
    for (std::size_t mask = 0; mask < coeffs.size(); ++mask) {
        if (std::abs(coeffs[mask]) > tol) {
            deg = std::max(deg, std::popcount(static_cast<std::uint32_t>(mask)));
        }
    }
    return deg;
}

double FourierExpansion::parseval_sum() const {
    double s = 0.0;
    for (double c : coeffs) s += c * c;
    return s;
}

double FourierExpansion::first_level_sum() const {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += coeffs[std::size_t{1} << k];
    return s;
}

double CubeFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double CubeFunction::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double CubeFunction::lp_norm(double p) const {
    double s = 0.0;
    for (double v : values) s += std::pow(std::abs(v), p);
    return std::pow(s / static_cast<double>(values.size()), 1.0 / p);
}

const FourierExpansion& CubeFunction::fourier() const {
    if (!fourier_cache_) {
        fourier_cache_ = std::make_shared<FourierExpansion>(cubefun::fourier(*this));
    }
    return *fourier_cache_;
}

void fwht(std::vector<double>& data, bool forward) {
    const std::size_t size = data.size();
    for (std::size_t h = 1; h < size; h <<= 1) {
        for (std::size_t i = 0; i < size; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double a = data[j];
                const double b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
    }
    if (forward) {
        const double scale = 1.0 / static_cast<double>(size);
        for (double& v : data) v *= scale;
    }
}

CubeFunction from_truth_table(int n, std::vector<double> values) {
    if (n < 1) throw BadParam("from_truth_table: n >= 1 required");
    if (n > kMaxVariables) throw TooLarge("from_truth_table: n > 24");
    if (values.size() != (std::size_t{1} << n)) {
        throw LengthMismatch("from_truth_table: expected 2^n values");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw NonFinite("from_truth_table: non-finite value");
    }
    CubeFunction f;
    f.n = n;
    f.values = std::move(values);
    return f;
}

FourierExpansion fourier(const CubeFunction& f) {
    FourierExpansion e;
    e.n = f.n;
    e.coeffs = f.values;
    fwht(e.coeffs, /*forward=*/true);
    return e;
}

CubeFunction synthesize(const FourierExpansion& e) {
    if (e.n > kMaxVariables) throw TooLarge("synthesize: n > 24");
    CubeFunction f;
    f.n = e.n;
    f.values = e.coeffs;
    fwht(f.values, /*forward=*/false);
    return f;
}

PropertyFlags classify(const CubeFunction& f, double tol) {
    PropertyFlags flags;
    flags.sup_norm = f.sup_norm();
    flags.bounded_by_one = flags.sup_norm <= 1.0 + tol;

    flags.boolean_valued = true;
    for (double v : f.values) {
        if (std::abs(std::abs(v) - 1.0) > tol) {
            flags.boolean_valued = false;
            break;
        }
    }

    // symmetric: values agree per Hamming-weight level
    flags.symmetric = true;
    {
        std::vector<double> level_value(f.n + 1);
        std::vector<bool> seen(f.n + 1, false);
        for (std::size_t idx = 0; idx < f.size() && flags.symmetric; ++idx) {
            const int w = std::popcount(static_cast<std::uint32_t>(idx));
            if (!seen[w]) {
                seen[w] = true;
                level_value[w] = f.values[idx];
            } else if (std::abs(f.values[idx] - level_value[w]) > tol) {
                flags.symmetric = false;
            }
        }
    }

    // monotone: bit clear means x = +1, so the bit-clear endpoint must dominate
    flags.monotone = true;
    for (int k = 0; k < f.n && flags.monotone; ++k) {
        const std::size_t bit = std::size_t{1} << k;
        for (std::size_t idx = 0; idx < f.size(); ++idx) {
            if (idx & bit) continue;
            if (f.values[idx] < f.values[idx | bit] - tol) {
                flags.monotone = false;
                break;
            }
        }
    }

    const FourierExpansion& e = f.fourier();
    flags.degree = e.degree(tol);
    flags.homogeneous = true;
    for (std::size_t mask = 0; mask < e.coeffs.size(); ++mask) {
        const int s = std::popcount(static_cast<std::uint32_t>(mask));
        if (s != flags.degree && std::abs(e.coeffs[mask]) > tol) {
            flags.homogeneous = false;
            break;
        }
    }
    return flags;
}

}  // namespace cubefun

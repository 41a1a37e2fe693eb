#include "cubefun/influence.hpp"

#include <cmath>

#include "cubefun/errors.hpp"

namespace cubefun {

double SensitivityField::max() const {
    double m = 0.0;
    for (double v : delta_values) m = std::max(m, v);
    return m;
}

double SensitivityField::mean() const {
    double s = 0.0;
    for (double v : delta_values) s += v;
    return s / static_cast<double>(delta_values.size());
}

CubeFunction discrete_derivative(const CubeFunction& f, int i) {
    if (i < 1 || i > f.n) throw IndexOutOfRange("discrete_derivative: variable index out of range");
    const std::size_t bit = std::size_t{1} << (i - 1);
    CubeFunction d;
    d.n = f.n;
    d.values.resize(f.size());
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        d.values[idx] = 0.5 * (f.values[idx] - f.values[idx ^ bit]);
    }
    return d;
}

double influence_p(const CubeFunction& f, int i, double p) {
    if (p < 1.0) throw BadExponent("influence_p: p >= 1 required");
    if (i < 1 || i > f.n) throw IndexOutOfRange("influence_p: variable index out of range");
    const std::size_t bit = std::size_t{1} << (i - 1);
    double s = 0.0;
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        s += std::pow(std::abs(0.5 * (f.values[idx] - f.values[idx ^ bit])), p);
    }
    return s / static_cast<double>(f.size());
}

double total_influence_p(const CubeFunction& f, double p) {
    if (p < 1.0) throw BadExponent("total_influence_p: p >= 1 required");
    double s = 0.0;
    for (int i = 1; i <= f.n; ++i) s += influence_p(f, i, p);
    return s;
}

SensitivityField sensitivity_field(const CubeFunction& f) {
    SensitivityField field;
    field.n = f.n;
    field.delta_values.assign(f.size(), 0.0);
    for (int k = 0; k < f.n; ++k) {
        const std::size_t bit = std::size_t{1} << k;
        for (std::size_t idx = 0; idx < f.size(); ++idx) {
            field.delta_values[idx] += std::abs(0.5 * (f.values[idx] - f.values[idx ^ bit]));
        }
    }
    return field;
}

CubeFunction laplacian(const CubeFunction& f) {
    CubeFunction l;
    l.n = f.n;
    l.values.assign(f.size(), 0.0);
    for (int k = 0; k < f.n; ++k) {
        const std::size_t bit = std::size_t{1} << k;
        for (std::size_t idx = 0; idx < f.size(); ++idx) {
            l.values[idx] += 0.5 * (f.values[idx] - f.values[idx ^ bit]);
        }
    }
    return l;
}

double variance_p(const CubeFunction& f, double p) {
    if (p < 1.0) throw BadExponent("variance_p: p >= 1 required");
    const double mean = f.mean();
    double s = 0.0;
    for (double v : f.values) s += std::pow(std::abs(v - mean), p);
    return s / static_cast<double>(f.size());
}

}  // namespace cubefun

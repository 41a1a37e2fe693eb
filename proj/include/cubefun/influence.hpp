#pragma once

#include "cubefun/cube_function.hpp"

namespace cubefun {

/// Pointwise sensitivity Delta(f)(x) = sum_i |f_i(x)| over the cube.
struct SensitivityField {
    int n = 0;
    std::vector<double> delta_values;  // length 2^n, all >= 0

    double max() const;
    double mean() const;
};

// f_i(x) = (f(x) - f(x xor e_i)) / 2; i is 1-based.
CubeFunction discrete_derivative(const CubeFunction& f, int i);

// E|f_i|^p
double influence_p(const CubeFunction& f, int i, double p);

// sum over i of influence_p
double total_influence_p(const CubeFunction& f, double p);

SensitivityField sensitivity_field(const CubeFunction& f);

// Lf = f_1 + ... + f_n; Fourier coefficients scale by |S|.
CubeFunction laplacian(const CubeFunction& f);

// E|f - E f|^p
double variance_p(const CubeFunction& f, double p);

}  // namespace cubefun

#pragma once

#include "cubefun/cube_function.hpp"
#include "cubefun/level_profile.hpp"
#include "cubefun/unipoly.hpp"

namespace cubefun {

/// Dense bivariate polynomial; coeffs[j][k] multiplies x^j y^k.
struct BiPoly {
    std::vector<std::vector<double>> coeffs;

    double eval(double x, double y) const;
    int total_degree() const;
};

// T_rho: scales each Fourier coefficient by rho^|S|.
CubeFunction noise(const CubeFunction& f, double rho);

// Sym(f) as a level profile: level k is the mean of f over weight-k points.
LevelProfile symmetrize(const CubeFunction& f);

// Sym_m(f) for m >= n, via hypergeometric mixing of the weight-w means of f;
// O(2^n + m n), never materializes 2^m points.
LevelProfile symmetrize_m(const CubeFunction& f, long long m);

// g(x, y) = f(x on S, y on the complement), by multilinear substitution.
BiPoly collapse_partition(const CubeFunction& f, std::uint32_t s_mask);

enum class DiagMode { plus_minus, x_line, y_line };

// plus_minus: h(eps) = g(1+eps, 1-eps); x_line: g(eps, 1); y_line: g(1, eps).
UniPoly diag_line(const BiPoly& g, DiagMode mode);

}  // namespace cubefun

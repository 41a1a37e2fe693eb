#pragma once

#include <string>
#include <vector>

#include "cubefun/cube_function.hpp"
#include "cubefun/unipoly.hpp"

namespace cubefun {

/// Symmetric function on {-1,1}^n stored as its n+1 level values.
/// levels[k] is the value at points with exactly k coordinates equal to -1;
/// the corresponding mean-coordinate abscissa is t_k = (n - 2k) / n.
struct LevelProfile {
    long long n = 0;
    std::vector<double> levels;  // length n+1

    double abscissa(long long k) const {
        return static_cast<double>(n - 2 * k) / static_cast<double>(n);
    }
};

// Dense truth table of the profile; requires n <= 24.
CubeFunction synthesize_levels(const LevelProfile& lp);

LevelProfile profile_of(const CubeFunction& f);  // requires a symmetric f

// Recover the univariate p with f(x) = p((x_1+...+x_n)/n). The degree is
// discovered: interpolants of increasing degree on spread-out level nodes are
// tried until the residual over all n+1 nodes drops below 1e-8.
UniPoly to_univariate(const LevelProfile& lp, double deg_tol = kDegTol);

LevelProfile from_univariate(const UniPoly& p, long long n);

// Total influence in level space, O(n):
// sum_w C(n-1,w)/2^(n-1) * n * |levels[w] - levels[w+1]| / 2.
double symmetric_total_influence(const LevelProfile& lp);

// Delta(f)(1) of the lifted function: n |p(1) - p(1 - 2/n)| / 2.
double symmetric_delta_at_one(const UniPoly& p, long long n);

// sum_i f_hat({i}) of the lifted function, in level space.
double level_first_level_sum(const LevelProfile& lp);

struct SymmetricReport {
    long long n = 0;
    int degree = 0;
    double influence = 0.0;
    double sup_norm_p = 0.0;
    double norm_bound = 0.0;  // n / (n - d^2), when applicable
    bool norm_certified = false;
    bool regime_ok = false;        // n > d^2
    bool strong_regime = false;    // n >= 64 d^4 log d
    double strong_t = 0.0;         // sqrt(n) (1/(4d^2) - 2/n)
    double reference = 0.0;        // d, side-by-side value
    double slack = 0.0;            // d - influence
    std::string note;
};

SymmetricReport symmetric_bound_report(const LevelProfile& lp);

// log C(n, k)
double log_binomial(long long n, long long k);

}  // namespace cubefun

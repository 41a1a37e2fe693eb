#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cubefun/cube_function.hpp"
#include "cubefun/lp.hpp"
#include "cubefun/unipoly.hpp"

namespace cubefun {

/// One inequality verdict. pass is measured <= bound up to a fixed margin.
struct BoundReport {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
    bool applicable = true;
    std::string note;
    std::map<std::string, double> context;

    static BoundReport make(std::string name, double measured, double bound);
};

// Inf <= ||Delta||_inf and ||Delta||_inf <= d^2, for ||f||_inf <= 1.
std::vector<BoundReport> check_general(const CubeFunction& f);

// Inf^(p) <= d^(3-p) for 1 <= p <= 2.
BoundReport check_interpolated(const CubeFunction& f, double p);

// Inf^(p) <= d^(2p) e^(pd) / n^(p-1) for transitive-invariant f, plus the
// Var <= Inf^(2) chain. Flagged inapplicable when the per-variable
// influences are not all equal.
std::vector<BoundReport> check_transitive(const CubeFunction& f, double p);

// ||T_alpha f||_1 >= alpha^min(d^2, n) ||f||_1; pass means the measured
// ratio clears the bound from above.
BoundReport check_noise_contraction(const CubeFunction& f, double alpha);

// For homogeneous f with alpha = 1 - 1/d: max_x Delta(T_alpha f)(x) / alpha^d
// against d / sqrt(1 - alpha^2).
BoundReport check_homogeneous_route(const CubeFunction& f);

// Informational: sum_i f_hat({i}) against sqrt(d); labels only, never a
// theorem verdict.
BoundReport gopalan_servedio_report(const CubeFunction& f);

// Random degree-<=d function with sup norm exactly 1, deterministic per seed.
CubeFunction random_bounded(int n, int d, std::uint64_t seed);

// Empirical lower bound for C_{d,alpha} = sup ||f||_1 / ||T_alpha f||_1.
double estimate_c(int d, double alpha, int n, int trials, std::uint64_t seed);

struct CertifiedEstimate {
    double value = 0.0;
    bool certified = false;
    int grid_size = 0;
    double lp_value = 0.0;
    std::map<std::string, double> context;
};

// K_d: certified LP maximum of h'(1) over |h(eps)| <= max(1, |eps|^d).
CertifiedEstimate estimate_k(int d, double grid_radius = 0.0, int grid_size = 0);

// M_d: certified LP maximum of p'(0) over monotone p with sup norm <= 1.
// Also carries the Klurman construction value and the kernel bound at 0.
CertifiedEstimate estimate_m(int d, int grid_size = 0);

}  // namespace cubefun

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubefun/cube_function.hpp"
#include "cubefun/level_profile.hpp"
#include "cubefun/unipoly.hpp"

namespace cubefun {

// Truth table of chi_S on n variables.
CubeFunction character(std::uint32_t s_mask, int n);

// Boolean homogeneous degree-2 function on 4 variables, (x(z+w) + y(z-w))/2.
CubeFunction example_f4();

// f4(x1..x4) x5 ... x_{d+2}: Boolean, homogeneous of degree d >= 2.
CubeFunction example_f4_times_character(int d);

// quadratics with sup norm 1 and sensitivity identically 2
CubeFunction example_quad_s();
CubeFunction example_quad_t();

// ((x_1+...+x_b)/b)^2 - ((x_{b+1}+...+x_{2b})/b)^2 on 2b variables;
// homogeneous of degree 2 with sensitivity 4(1 - 1/b) at the all-ones point.
CubeFunction homogeneous_counterexample(int block);

// Delta at the all-ones point of the counterexample, computed from pointwise
// flips; works for blocks far beyond the dense-table cap.
double counterexample_delta_at_one(long long block);

// Lookup by name: f4, quad_s, quad_t, f4_times_character (uses d),
// homogeneous_counterexample (uses block), majority (uses n).
CubeFunction named_example(const std::string& name, int param = 0);

// Level profile of T_d((x_1+...+x_n)/n). The influence-below-d behaviour is
// the odd-d construction; even d is permitted but flagged by the caller.
LevelProfile chebyshev_symmetric(int d, long long n);

struct MonotoneExtremal {
    // labeled candidates; for odd d both the F- and H-derived ones
    std::vector<std::pair<std::string, UniPoly>> candidates;
    double best_derivative_at_zero = 0.0;
};

// Monotone polynomial with sup norm 1 whose derivative is the parity-matched
// weighted square of the Jacobi reproducing kernel at 0; attains the
// derivative bound p'(0) = klurman_derivative_bound(d, 0). Centered so
// min + max = 0.
MonotoneExtremal klurman_monotone_extremal(int d);

CubeFunction majority(int n);  // odd n

}  // namespace cubefun

#pragma once

#include <vector>

namespace cubefun {

enum class Sense { le, ge, eq };

/// Dense LP in row form: maximize objective . x subject to the rows.
/// Variables are nonnegative unless flagged free.
struct DenseLP {
    struct Row {
        std::vector<double> a;
        Sense sense = Sense::le;
        double rhs = 0.0;
    };

    std::vector<double> objective;
    std::vector<Row> rows;
    std::vector<bool> free_vars;  // empty means all nonnegative

    void add_row(std::vector<double> a, Sense sense, double rhs) {
        rows.push_back({std::move(a), sense, rhs});
    }
};

struct LPSolution {
    std::vector<double> x;
    double objective = 0.0;
    long iterations = 0;
    double feasibility_residual = 0.0;
};

// Primal simplex with Bland's anti-cycling rule, two phases.
// Throws Infeasible / Unbounded / IterationLimit.
LPSolution lp_solve(const DenseLP& lp, long max_iterations = 200000);

}  // namespace cubefun

#include "cubefun/lp.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "cubefun/errors.hpp"

namespace cubefun {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr long kStallLimit = 64;  // degenerate steps before switching to Bland

// Dense tableau simplex. Columns: structural (split for free vars), slack /
// surplus, artificial. Dantzig pricing with a Bland fallback once the
// objective stalls, which preserves the anti-cycling guarantee.
class Tableau {
  public:
    Tableau(const DenseLP& lp) {
        const std::size_t nv = lp.objective.size();
        split_.resize(nv, false);
        if (!lp.free_vars.empty()) {
            for (std::size_t j = 0; j < nv && j < lp.free_vars.size(); ++j) {
                split_[j] = lp.free_vars[j];
            }
        }
        col_of_var_.resize(nv);
        neg_col_of_var_.assign(nv, -1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < nv; ++j) {
            col_of_var_[j] = col++;
            if (split_[j]) neg_col_of_var_[j] = static_cast<int>(col++);
        }
        n_structural_ = col;

        const std::size_t m = lp.rows.size();
        std::size_t n_slack = 0;
        for (const auto& row : lp.rows) {
            if (row.sense != Sense::eq) ++n_slack;
        }
        n_total_ = n_structural_ + n_slack + m;  // one artificial per row, some unused
        a_.assign(m, std::vector<double>(n_total_ + 1, 0.0));
        basis_.assign(m, -1);
        artificial_start_ = n_structural_ + n_slack;

        std::size_t slack_col = n_structural_;
        for (std::size_t r = 0; r < m; ++r) {
            const auto& row = lp.rows[r];
            double sign = (row.rhs < 0.0) ? -1.0 : 1.0;
            for (std::size_t j = 0; j < nv && j < row.a.size(); ++j) {
                a_[r][col_of_var_[j]] = sign * row.a[j];
                if (split_[j]) a_[r][neg_col_of_var_[j]] = -sign * row.a[j];
            }
            a_[r][n_total_] = sign * row.rhs;
            Sense sense = row.sense;
            if (sign < 0.0 && sense != Sense::eq) {
                sense = (sense == Sense::le) ? Sense::ge : Sense::le;
            }
            row_sign_.push_back(sign);
            if (sense == Sense::le) {
                a_[r][slack_col] = 1.0;
                basis_[r] = static_cast<int>(slack_col);
                slack_row_[slack_col] = {r, 1.0};
                ++slack_col;
            } else if (sense == Sense::ge) {
                a_[r][slack_col] = -1.0;
                slack_row_[slack_col] = {r, -1.0};
                ++slack_col;
            }
            if (basis_[r] < 0) {
                const std::size_t art = artificial_start_ + r;
                a_[r][art] = 1.0;
                basis_[r] = static_cast<int>(art);
                has_artificial_ = true;
            }
        }
    }

    void solve(const DenseLP& lp, long max_iterations, LPSolution& out) {
        long used = 0;
        if (has_artificial_) {
            // phase 1: minimize the sum of artificials
            std::vector<double> cost(n_total_, 0.0);
            for (std::size_t c = artificial_start_; c < n_total_; ++c) cost[c] = -1.0;
            used = run(cost, max_iterations, /*limit=*/artificial_start_);
            double phase1 = 0.0;
            for (std::size_t r = 0; r < a_.size(); ++r) {
                if (basis_[r] >= static_cast<int>(artificial_start_)) phase1 += a_[r][n_total_];
            }
            if (phase1 > kFeasTol) throw Infeasible("lp_solve: infeasible");
            // drive leftover artificials out of the basis; rows that are zero
            // in every real column are redundant and can keep theirs
            for (std::size_t r = 0; r < a_.size(); ++r) {
                if (basis_[r] < static_cast<int>(artificial_start_)) continue;
                for (std::size_t c = 0; c < artificial_start_; ++c) {
                    if (std::abs(a_[r][c]) > kPivotTol) {
                        pivot(r, c);
                        break;
                    }
                }
            }
        }
        std::vector<double> cost(n_total_, 0.0);
        for (std::size_t j = 0; j < lp.objective.size(); ++j) {
            cost[col_of_var_[j]] = lp.objective[j];
            if (split_[j]) cost[neg_col_of_var_[j]] = -lp.objective[j];
        }
        used += run(cost, max_iterations - used, /*limit=*/artificial_start_);
        out.iterations = used;

        // the tableau values drift over long pivot chains; re-solve the final
        // basic system directly against the original data
        std::vector<double> full(n_total_, 0.0);
        refine_basic_solution(lp, full);
        out.x.assign(lp.objective.size(), 0.0);
        out.objective = 0.0;
        for (std::size_t j = 0; j < lp.objective.size(); ++j) {
            out.x[j] = full[col_of_var_[j]];
            if (split_[j]) out.x[j] -= full[neg_col_of_var_[j]];
            out.objective += lp.objective[j] * out.x[j];
        }
        out.feasibility_residual = residual(lp, out.x);
        if (out.feasibility_residual > kFeasTol) {
            throw CertificationFailed("lp_solve: feasibility residual above 1e-9");
        }
    }

  private:
    // original-data column of tableau index c at constraint row r
    double original_entry(const DenseLP& lp, std::size_t r, std::size_t c) const {
        if (c < n_structural_) {
            for (std::size_t j = 0; j < col_of_var_.size(); ++j) {
                const double aj = j < lp.rows[r].a.size() ? lp.rows[r].a[j] : 0.0;
                if (col_of_var_[j] == c) return row_sign_[r] * aj;
                if (neg_col_of_var_[j] == static_cast<int>(c)) return -row_sign_[r] * aj;
            }
            return 0.0;
        }
        if (c < artificial_start_) {
            const auto it = slack_row_.find(c);
            return (it != slack_row_.end() && it->second.first == r) ? it->second.second : 0.0;
        }
        return (c == artificial_start_ + r) ? 1.0 : 0.0;
    }

    // LU solve of B x_B = b from the original data, one refinement sweep
    void refine_basic_solution(const DenseLP& lp, std::vector<double>& full) const {
        const std::size_t m = a_.size();
        std::vector<std::vector<double>> b_cols(m, std::vector<double>(m));
        std::vector<double> rhs(m);
        for (std::size_t r = 0; r < m; ++r) {
            rhs[r] = row_sign_[r] * lp.rows[r].rhs;
            for (std::size_t k = 0; k < m; ++k) {
                b_cols[r][k] = original_entry(lp, r, static_cast<std::size_t>(basis_[k]));
            }
        }
        std::vector<std::vector<double>> lu = b_cols;
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        bool singular = false;
        for (std::size_t k = 0; k < m && !singular; ++k) {
            std::size_t piv = k;
            for (std::size_t r = k + 1; r < m; ++r) {
                if (std::abs(lu[r][k]) > std::abs(lu[piv][k])) piv = r;
            }
            if (std::abs(lu[piv][k]) < 1e-300) {
                singular = true;
                break;
            }
            std::swap(lu[k], lu[piv]);
            std::swap(perm[k], perm[piv]);
            for (std::size_t r = k + 1; r < m; ++r) {
                const double f = lu[r][k] / lu[k][k];
                lu[r][k] = f;
                if (f == 0.0) continue;
                for (std::size_t c = k + 1; c < m; ++c) lu[r][c] -= f * lu[k][c];
            }
        }
        auto lu_solve = [&](const std::vector<double>& b, std::vector<double>& x) {
            std::vector<double> y(m);
            for (std::size_t r = 0; r < m; ++r) {
                double v = b[perm[r]];
                for (std::size_t c = 0; c < r; ++c) v -= lu[r][c] * y[c];
                y[r] = v;
            }
            x.assign(m, 0.0);
            for (std::size_t r = m; r-- > 0;) {
                double v = y[r];
                for (std::size_t c = r + 1; c < m; ++c) v -= lu[r][c] * x[c];
                x[r] = v / lu[r][r];
            }
        };
        if (singular) {
            // fall back to the tableau values
            for (std::size_t r = 0; r < m; ++r) {
                if (basis_[r] >= 0) full[basis_[r]] = a_[r][n_total_];
            }
            return;
        }
        std::vector<double> xb;
        lu_solve(rhs, xb);
        // one step of iterative refinement
        std::vector<double> resid(m), delta;
        for (std::size_t r = 0; r < m; ++r) {
            double v = rhs[r];
            for (std::size_t k = 0; k < m; ++k) v -= b_cols[r][k] * xb[k];
            resid[r] = v;
        }
        lu_solve(resid, delta);
        for (std::size_t k = 0; k < m; ++k) xb[k] += delta[k];
        for (std::size_t k = 0; k < m; ++k) full[basis_[k]] = xb[k];
    }

    static double residual(const DenseLP& lp, const std::vector<double>& x) {
        double worst = 0.0;
        for (const auto& row : lp.rows) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < row.a.size() && j < x.size(); ++j) lhs += row.a[j] * x[j];
            const double scale = std::max(1.0, std::abs(row.rhs));
            if (row.sense == Sense::le) {
                worst = std::max(worst, (lhs - row.rhs) / scale);
            } else if (row.sense == Sense::ge) {
                worst = std::max(worst, (row.rhs - lhs) / scale);
            } else {
                worst = std::max(worst, std::abs(lhs - row.rhs) / scale);
            }
        }
        return worst;
    }

    // One phase of the simplex. Columns at or past `limit` may leave the basis
    // but never enter during phase 2 (limit = artificial_start_); phase 1 uses
    // the same limit since artificials start basic and must only leave.
    long run(const std::vector<double>& cost, long max_iterations, std::size_t limit) {
        const std::size_t m = a_.size();
        // reduced-cost row, kept in sync by every pivot
        z_.assign(n_total_ + 1, 0.0);
        for (std::size_t c = 0; c < n_total_; ++c) z_[c] = cost[c];
        for (std::size_t r = 0; r < m; ++r) {
            const double cb = cost[basis_[r]];
            if (cb == 0.0) continue;
            for (std::size_t c = 0; c <= n_total_; ++c) z_[c] -= cb * a_[r][c];
        }
        long stall = 0;
        bool bland = false;
        for (long it = 0; it < max_iterations; ++it) {
            int entering = -1;
            if (bland) {
                for (std::size_t c = 0; c < limit; ++c) {
                    if (z_[c] > kPivotTol) {
                        entering = static_cast<int>(c);
                        break;
                    }
                }
            } else {
                double best = kPivotTol;
                for (std::size_t c = 0; c < limit; ++c) {
                    if (z_[c] > best) {
                        best = z_[c];
                        entering = static_cast<int>(c);
                    }
                }
            }
            if (entering < 0) return it;

            int leave_row = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m; ++r) {
                const double coef = a_[r][entering];
                if (coef <= kPivotTol) continue;
                const double ratio = a_[r][n_total_] / coef;
                if (ratio < best_ratio - kPivotTol) {
                    best_ratio = ratio;
                    leave_row = static_cast<int>(r);
                } else if (ratio < best_ratio + kPivotTol && leave_row >= 0) {
                    // tie: Bland wants the lowest basis index; otherwise take
                    // the largest pivot element for stability
                    if (bland ? basis_[r] < basis_[leave_row]
                              : coef > a_[leave_row][entering]) {
                        leave_row = static_cast<int>(r);
                    }
                }
            }
            if (leave_row < 0) throw Unbounded("lp_solve: unbounded");

            const bool degenerate = best_ratio < kPivotTol;
            stall = degenerate ? stall + 1 : 0;
            if (stall > kStallLimit) bland = true;
            if (!degenerate) bland = false;
            pivot(static_cast<std::size_t>(leave_row), static_cast<std::size_t>(entering));
        }
        throw IterationLimit("lp_solve: iteration limit reached");
    }

    void pivot(std::size_t row, std::size_t col) {
        const double p = a_[row][col];
        for (double& v : a_[row]) v /= p;
        a_[row][col] = 1.0;
        for (std::size_t r = 0; r < a_.size(); ++r) {
            if (r == row) continue;
            const double factor = a_[r][col];
            if (factor == 0.0) continue;
            for (std::size_t c = 0; c <= n_total_; ++c) a_[r][c] -= factor * a_[row][c];
            a_[r][col] = 0.0;
        }
        const double zf = z_[col];
        if (zf != 0.0) {
            for (std::size_t c = 0; c <= n_total_; ++c) z_[c] -= zf * a_[row][c];
            z_[col] = 0.0;
        }
        basis_[row] = static_cast<int>(col);
    }

    std::vector<std::vector<double>> a_;
    std::vector<double> z_;
    std::vector<double> row_sign_;
    std::map<std::size_t, std::pair<std::size_t, double>> slack_row_;
    std::vector<int> basis_;
    std::vector<bool> split_;
    std::vector<std::size_t> col_of_var_;
    std::vector<int> neg_col_of_var_;
    std::size_t n_structural_ = 0;
    std::size_t n_total_ = 0;
    std::size_t artificial_start_ = 0;
    bool has_artificial_ = false;
};

}  // namespace

LPSolution lp_solve(const DenseLP& lp, long max_iterations) {
    Tableau tableau(lp);
    LPSolution out;
    tableau.solve(lp, max_iterations, out);
    return out;
}

}  // namespace cubefun

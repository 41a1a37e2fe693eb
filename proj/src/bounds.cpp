#include "cubefun/bounds.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "cubefun/constructs.hpp"
#include "cubefun/errors.hpp"
#include "cubefun/influence.hpp"
#include "cubefun/operators.hpp"

namespace cubefun {

BoundReport BoundReport::make(std::string name, double measured, double bound) {
    BoundReport rep;
    rep.name = std::move(name);
    rep.measured = measured;
    rep.bound = bound;
    rep.slack = bound - measured;
    rep.pass = measured <= bound * (1.0 + 1e-9) + 1e-12;
    return rep;
}

namespace {

void require_bounded(const CubeFunction& f, const char* who) {
    if (f.sup_norm() > 1.0 + 1e-9) {
        throw NotBounded(std::string(who) + ": sup norm exceeds 1");
    }
}

}  // namespace

std::vector<BoundReport> check_general(const CubeFunction& f) {
    require_bounded(f, "check_general");
    const int d = f.fourier().degree();
    const double inf = total_influence_p(f, 1.0);
    const double smax = sensitivity_field(f).max();
    std::vector<BoundReport> out;
    out.push_back(BoundReport::make("influence_vs_max_sensitivity", inf, smax));
    out.push_back(BoundReport::make("max_sensitivity_vs_d_squared", smax,
                                    static_cast<double>(d) * d));
    for (auto& rep : out) {
        rep.context["d"] = d;
        rep.context["n"] = f.n;
    }
    return out;
}

BoundReport check_interpolated(const CubeFunction& f, double p) {
    if (p < 1.0 || p > 2.0) throw BadExponent("check_interpolated: p in [1,2] required");
    require_bounded(f, "check_interpolated");
    const int d = f.fourier().degree();
    auto rep = BoundReport::make("lp_influence_interpolated", total_influence_p(f, p),
                                 std::pow(static_cast<double>(d), 3.0 - p));
    rep.context["d"] = d;
    rep.context["n"] = f.n;
    rep.context["p"] = p;
    return rep;
}

std::vector<BoundReport> check_transitive(const CubeFunction& f, double p) {
    if (p < 1.0 || p > 2.0) throw BadExponent("check_transitive: p in [1,2] required");
    require_bounded(f, "check_transitive");
    const int d = f.fourier().degree();
    const int n = f.n;

    double lo = 0.0, hi = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double v = influence_p(f, i, 1.0);
        if (i == 1) lo = hi = v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const bool equivariant = hi - lo <= 1e-6;

    const double dn = static_cast<double>(n);
    const double dd = static_cast<double>(d);
    const double bound = std::pow(dd, 2.0 * p) * std::exp(p * dd) / std::pow(dn, p - 1.0);

    std::vector<BoundReport> out;
    out.push_back(BoundReport::make("transitive_lp_influence", total_influence_p(f, p), bound));
    out.push_back(BoundReport::make("variance_vs_l2_influence", variance_p(f, 2.0),
                                    total_influence_p(f, 2.0)));
    for (auto& rep : out) {
        rep.applicable = equivariant;
        if (!equivariant) rep.note = "per-variable influences unequal; not transitive-invariant";
        rep.context["d"] = d;
        rep.context["n"] = n;
        rep.context["p"] = p;
        rep.context["influence_spread"] = hi - lo;
    }
    return out;
}

BoundReport check_noise_contraction(const CubeFunction& f, double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw BadParam("check_noise_contraction: alpha in (0,1] required");
    }
    const int d = f.fourier().degree();
    const int expo = std::min(d * d, f.n);
    const double l1 = f.l1_norm();
    const double contracted = noise(f, alpha).l1_norm();
    // lower-bound direction: required floor goes in measured, observed in bound
    auto rep = BoundReport::make("noise_contraction_floor",
                                 std::pow(alpha, static_cast<double>(expo)) * l1, contracted);
    rep.context["d"] = d;
    rep.context["n"] = f.n;
    rep.context["alpha"] = alpha;
    rep.context["l1_norm"] = l1;
    rep.context["exponent"] = expo;
    if (l1 > 0.0) rep.context["ratio"] = contracted / l1;
    rep.note = "pass means the contracted L1 norm stays above the floor";
    return rep;
}

BoundReport check_homogeneous_route(const CubeFunction& f) {
    require_bounded(f, "check_homogeneous_route");
    const PropertyFlags flags = classify(f);
    const int d = flags.degree;
    BoundReport rep;
    if (!flags.homogeneous || d < 1) {
        rep.name = "homogeneous_smoothed_sensitivity";
        rep.applicable = false;
        rep.note = "input is not homogeneous of positive degree";
        rep.pass = true;
        return rep;
    }
    const double dd = static_cast<double>(d);
    const double alpha = 1.0 - 1.0 / dd;
    const double smax = sensitivity_field(noise(f, alpha)).max();
    rep = BoundReport::make("homogeneous_smoothed_sensitivity",
                            smax / std::pow(alpha, dd), dd / std::sqrt(1.0 - alpha * alpha));
    rep.context["d"] = d;
    rep.context["n"] = f.n;
    rep.context["alpha"] = alpha;
    return rep;
}

BoundReport gopalan_servedio_report(const CubeFunction& f) {
    const PropertyFlags flags = classify(f);
    const int d = flags.degree;
    auto rep = BoundReport::make("first_level_sum_vs_sqrt_d", f.fourier().first_level_sum(),
                                 std::sqrt(static_cast<double>(d)));
    rep.note = rep.pass ? "consistent" : "counterexample-candidate";
    rep.applicable = flags.boolean_valued;
    if (!flags.boolean_valued) rep.note += "; input not Boolean, informational only";
    rep.context["d"] = d;
    rep.context["n"] = f.n;
    return rep;
}

CubeFunction random_bounded(int n, int d, std::uint64_t seed) {
    if (n < 1 || n > 12) throw SizeError("random_bounded: 1 <= n <= 12 required");
    if (d < 0 || d > n) throw SizeError("random_bounded: 0 <= d <= n required");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    FourierExpansion e;
    e.n = n;
    e.coeffs.assign(std::size_t{1} << n, 0.0);
    for (std::size_t mask = 0; mask < e.coeffs.size(); ++mask) {
        if (std::popcount(static_cast<std::uint32_t>(mask)) <= d) e.coeffs[mask] = gauss(rng);
    }
    CubeFunction f = synthesize(e);
    const double s = f.sup_norm();
    if (s > 0.0) {
        for (double& v : f.values) v /= s;
    } else {
        f.values.assign(f.size(), 1.0);
    }
    return f;
}

double estimate_c(int d, double alpha, int n, int trials, std::uint64_t seed) {
    if (n < 1 || n > 12) throw SizeError("estimate_c: 1 <= n <= 12 required");
    if (d < 0 || d > n) throw SizeError("estimate_c: 0 <= d <= n required");
    if (!(alpha > 0.0) || alpha > 1.0) throw BadParam("estimate_c: alpha in (0,1] required");
    if (d == 0) return 1.0;

    auto ratio = [alpha](const CubeFunction& f) {
        const double denom = noise(f, alpha).l1_norm();
        return denom > 0.0 ? f.l1_norm() / denom : 1.0;
    };

    double best = 1.0;
    for (int k = 1; k <= d; ++k) {
        best = std::max(best, ratio(character((1u << k) - 1u, n)));
    }
    if (d >= 2 && n >= 4) {
        best = std::max(best, ratio(example_f4()));
        best = std::max(best, ratio(example_quad_s()));
        best = std::max(best, ratio(example_quad_t()));
    }
    if (d >= 2 && d + 2 <= n) {
        best = std::max(best, ratio(example_f4_times_character(d)));
    }
    for (int t = 0; t < trials; ++t) {
        best = std::max(best, ratio(random_bounded(n, d, seed + static_cast<std::uint64_t>(t))));
    }
    const double cap = std::pow(alpha, -static_cast<double>(std::min(d * d, n)));
    return std::min(best, cap * (1.0 + 1e-9));
}

namespace {

std::vector<double> chebyshev_points(double lo, double hi, int count) {
    std::vector<double> pts(count);
    for (int j = 0; j < count; ++j) {
        const double t = count == 1 ? 0.0 : std::cos(M_PI * j / (count - 1));
        pts[j] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
    }
    return pts;
}

struct RatioPeak {
    double value = 0.0;
    double where = 0.0;
};

// max of |h(eps)| / |eps|^k over [lo, hi] and its location; stationary points
// of the ratio solve eps h' - k h = 0 (plain h' when k = 0).
RatioPeak ratio_peak(const UniPoly& h, int k, double lo, double hi) {
    auto ratio = [&](double e) {
        return k == 0 ? std::abs(h.eval(e))
                      : std::abs(h.eval(e)) / std::pow(std::abs(e), static_cast<double>(k));
    };
    RatioPeak best{ratio(lo), lo};
    auto consider = [&](double x) {
        const double r = ratio(x);
        if (r > best.value) best = {r, x};
    };
    consider(hi);
    const UniPoly q = k == 0 ? h.derivative()
                             : UniPoly::identity() * h.derivative() - h * static_cast<double>(k);
    const int grid = 512;
    double prev_x = lo, prev_q = q.eval(lo);
    for (int j = 1; j <= grid; ++j) {
        const double x = lo + (hi - lo) * j / grid;
        const double qx = q.eval(x);
        consider(x);
        if (prev_q == 0.0 || (prev_q < 0.0) != (qx < 0.0)) {
            double a = prev_x, b = x, qa = prev_q;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (a + b);
                const double qm = q.eval(mid);
                if ((qa < 0.0) == (qm < 0.0)) {
                    a = mid;
                    qa = qm;
                } else {
                    b = mid;
                }
            }
            consider(0.5 * (a + b));
        }
        prev_x = x;
        prev_q = qx;
    }
    return best;
}

// minimum of q over [lo, hi] and its location: endpoint / grid candidates
// plus bisected sign changes of q'.
RatioPeak signed_min(const UniPoly& q, double lo, double hi) {
    RatioPeak best{q.eval(lo), lo};
    auto consider = [&](double x) {
        const double v = q.eval(x);
        if (v < best.value) best = {v, x};
    };
    consider(hi);
    const UniPoly dq = q.derivative();
    const int grid = 512;
    double prev_x = lo, prev_d = dq.eval(lo);
    for (int j = 1; j <= grid; ++j) {
        const double x = lo + (hi - lo) * j / grid;
        const double dx = dq.eval(x);
        consider(x);
        if (prev_d == 0.0 || (prev_d < 0.0) != (dx < 0.0)) {
            double a = prev_x, b = x, da = prev_d;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (a + b);
                const double dm = dq.eval(mid);
                if ((da < 0.0) == (dm < 0.0)) {
                    a = mid;
                    da = dm;
                } else {
                    b = mid;
                }
            }
            consider(0.5 * (a + b));
        }
        prev_x = x;
        prev_d = dx;
    }
    return best;
}

// worst feasibility factor of h against |h(eps)| <= max(1, |eps|^d) on the
// whole line (> 1 means h/factor is feasible), plus the offending points.
double k_feasibility_factor(const UniPoly& h, int d, double radius,
                            std::vector<double>& hot_points) {
    const double far = radius * 1024.0;
    double factor = 1.0;
    for (const RatioPeak& peak :
         {ratio_peak(h, 0, -1.0, 1.0), ratio_peak(h, d, 1.0, radius),
          ratio_peak(h, d, -radius, -1.0), ratio_peak(h, d, radius, far),
          ratio_peak(h, d, -far, -radius)}) {
        factor = std::max(factor, peak.value);
        // far-region peaks stay out of the LP: their rescaled rows would
        // overflow the tableau, and the leading-coefficient box covers them
        if (peak.value > 1.0 + 1e-12 && std::abs(peak.where) <= radius) {
            hot_points.push_back(peak.where);
        }
    }
    // beyond `far` only the leading monomials matter
    double tail = 0.0;
    for (int j = 0; j <= h.degree(); ++j) {
        tail += std::abs(h.coeffs[j]) / std::pow(far, static_cast<double>(d - j));
    }
    return std::max(factor, tail);
}

// skip refinement points that essentially repeat an existing grid node;
// near-duplicate rows only feed degeneracy
void add_grid_point(std::vector<double>& grid, double x) {
    for (double g : grid) {
        if (std::abs(g - x) < 1e-8) return;
    }
    grid.push_back(x);
}

}  // namespace

CertifiedEstimate estimate_k(int d, double grid_radius, int grid_size) {
    if (d < 1 || d > 8) throw BadParam("estimate_k: 1 <= d <= 8 required");
    const double radius = grid_radius > 0.0 ? std::max(grid_radius, 4.0)
                                            : std::max(4.0, 2.0 * static_cast<double>(d));
    const int per_interval = grid_size > 0 ? std::max(grid_size / 3, 16) : 64;

    std::vector<double> grid;
    for (auto interval : {std::pair{-radius, -1.0}, {-1.0, 1.0}, {1.0, radius}}) {
        for (double x : chebyshev_points(interval.first, interval.second, per_interval)) {
            grid.push_back(x);
        }
    }

    CertifiedEstimate out;
    out.context["radius"] = radius;
    double prev = -1.0;
    // exchange loop: re-solve with the continuous check's worst points added
    for (int round = 0; round < 40; ++round) {
        // variables scaled by radius^j so the tableau entries stay in [-1,1]
        DenseLP lp;
        lp.objective.resize(d + 1);
        lp.free_vars.assign(d + 1, true);
        for (int j = 0; j <= d; ++j) {
            lp.objective[j] = static_cast<double>(j) / std::pow(radius, static_cast<double>(j));
        }
        for (double eps : grid) {
            // rows normalized by their right-hand side for conditioning
            const double rhs = std::max(1.0, std::pow(std::abs(eps), static_cast<double>(d)));
            std::vector<double> row(d + 1);
            for (int j = 0; j <= d; ++j) {
                row[j] = std::pow(eps / radius, static_cast<double>(j)) / rhs;
            }
            lp.add_row(row, Sense::le, 1.0);
            std::vector<double> neg(row);
            for (double& v : neg) v = -v;
            lp.add_row(neg, Sense::le, 1.0);
        }
        {
            std::vector<double> lead(d + 1, 0.0);
            lead[d] = 1.0;
            lp.add_row(lead, Sense::le, std::pow(radius, static_cast<double>(d)));
            lead[d] = -1.0;
            lp.add_row(lead, Sense::le, std::pow(radius, static_cast<double>(d)));
        }

        LPSolution sol;
        try {
            sol = lp_solve(lp);
        } catch (const Error&) {
            // refined grid went degenerate; the previous round's repaired
            // value is already a valid certified lower bound
            if (round == 0) throw;
            break;
        }
        UniPoly h;
        h.coeffs.resize(d + 1);
        for (int j = 0; j <= d; ++j) {
            h.coeffs[j] = sol.x[j] / std::pow(radius, static_cast<double>(j));
        }
        std::vector<double> hot;
        const double factor = k_feasibility_factor(h, d, radius, hot);
        // h / factor is feasible for the continuous program, so this is a
        // certified lower bound on the optimum; the grid LP is an upper bound
        const double certified = sol.objective / factor;

        out.lp_value = sol.objective;
        out.value = certified;
        out.grid_size = static_cast<int>(grid.size());
        out.certified = true;
        out.context["feasibility_factor"] = factor;
        if (factor <= 1.0 + 1e-9 || (prev >= 0.0 && std::abs(certified - prev) < 1e-6)) break;
        prev = certified;
        const std::size_t before = grid.size();
        for (double x : hot) add_grid_point(grid, x);
        if (grid.size() == before) break;
    }
    return out;
}

CertifiedEstimate estimate_m(int d, int grid_size) {
    if (d < 1 || d > 20) throw BadParam("estimate_m: 1 <= d <= 20 required");
    const int points = grid_size > 0 ? grid_size : std::max(64, 8 * d);

    const MonotoneExtremal construction = klurman_monotone_extremal(d);
    std::vector<double> grid = chebyshev_points(-1.0, 1.0, points);

    CertifiedEstimate out;
    double prev = -1.0;
    // exchange loop, as in estimate_k: keep the LP small and add the points
    // where the continuous constraints bind hardest
    for (int round = 0; round < 40; ++round) {
        DenseLP lp;
        lp.objective.assign(d + 1, 0.0);
        lp.objective[1] = 1.0;  // p'(0)
        lp.free_vars.assign(d + 1, true);
        for (double x : grid) {
            std::vector<double> val(d + 1), der(d + 1, 0.0);
            double power = 1.0;
            for (int j = 0; j <= d; ++j) {
                val[j] = power;
                if (j + 1 <= d) der[j + 1] = (j + 1) * power;
                power *= x;
            }
            lp.add_row(der, Sense::ge, 0.0);
            lp.add_row(val, Sense::le, 1.0);
            std::vector<double> neg(val);
            for (double& v : neg) v = -v;
            lp.add_row(neg, Sense::le, 1.0);
        }

        LPSolution sol;
        try {
            sol = lp_solve(lp);
        } catch (const Error&) {
            if (round == 0) throw;
            break;
        }
        UniPoly p{sol.x};
        // repair: tilt until p' >= 0 everywhere, then rescale to sup norm 1
        const RatioPeak defect = signed_min(p.derivative(), -1.0, 1.0);
        if (defect.value < 0.0) p = p + UniPoly::identity() * (-defect.value);
        const RatioPeak peak = ratio_peak(p, 0, -1.0, 1.0);
        const double s = peak.value;
        const double certified = s > 0.0 ? p.derivative().eval(0.0) / s : 0.0;

        out.lp_value = sol.objective;
        out.value = certified;
        out.grid_size = static_cast<int>(grid.size());
        out.certified = true;
        out.context["derivative_defect"] = std::min(defect.value, 0.0);
        out.context["sup_after_repair"] = s;
        const bool tight = defect.value >= -1e-12 && s <= 1.0 + 1e-12;
        if (tight || (prev >= 0.0 && std::abs(certified - prev) < 1e-6)) break;
        prev = certified;
        const std::size_t before = grid.size();
        if (defect.value < 0.0) add_grid_point(grid, defect.where);
        if (peak.value > 1.0) add_grid_point(grid, peak.where);
        if (grid.size() == before) break;
    }
    out.value = std::max(out.value, construction.best_derivative_at_zero);
    out.context["klurman_reference"] = construction.best_derivative_at_zero;
    out.context["klurman_bound"] = klurman_derivative_bound(d, 0.0);
    return out;
}

}  // namespace cubefun

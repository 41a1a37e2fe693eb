#include "cubefun/level_profile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "cubefun/errors.hpp"

namespace cubefun {

double log_binomial(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

CubeFunction synthesize_levels(const LevelProfile& lp) {
    if (lp.n > kMaxVariables) throw TooLarge("synthesize_levels: n > 24");
    CubeFunction f;
    f.n = static_cast<int>(lp.n);
    f.values.resize(std::size_t{1} << lp.n);
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        f.values[idx] = lp.levels[std::popcount(static_cast<std::uint32_t>(idx))];
    }
    return f;
}

LevelProfile profile_of(const CubeFunction& f) {
    LevelProfile lp;
    lp.n = f.n;
    lp.levels.assign(f.n + 1, 0.0);
    std::vector<bool> seen(f.n + 1, false);
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        const int w = std::popcount(static_cast<std::uint32_t>(idx));
        if (!seen[w]) {
            seen[w] = true;
            lp.levels[w] = f.values[idx];
        } else if (std::abs(f.values[idx] - lp.levels[w]) > kDegTol) {
            throw InconsistentProfile("profile_of: input is not symmetric");
        }
    }
    return lp;
}

namespace {

// Newton interpolation through the given nodes, returned in the monomial basis.
UniPoly newton_interpolate(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    std::vector<double> dd(ys);  // divided differences, in place
    for (std::size_t j = 1; j < m; ++j) {
        for (std::size_t i = m - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    // Horner-style expansion of the Newton form
    UniPoly p = UniPoly::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        p = p * UniPoly{{-xs[i], 1.0}} + UniPoly::constant(dd[i]);
    }
    return p;
}

}  // namespace

UniPoly to_univariate(const LevelProfile& lp, double deg_tol) {
    const long long n = lp.n;
    const int max_deg = static_cast<int>(std::min<long long>(n, 128));
    for (int d = 0; d <= max_deg; ++d) {
        // pick d+1 distinct level indices near Chebyshev points of [-1,1]
        std::set<long long> picked;
        for (int j = 0; j <= d; ++j) {
            const double target = (d == 0) ? 0.0 : std::cos(M_PI * j / d);
            long long k = std::llround(static_cast<double>(n) * (1.0 - target) / 2.0);
            k = std::clamp<long long>(k, 0, n);
            while (picked.count(k) && k < n) ++k;
            while (picked.count(k) && k > 0) --k;
            picked.insert(k);
        }
        if (static_cast<int>(picked.size()) != d + 1) continue;
        std::vector<double> xs, ys;
        for (long long k : picked) {
            xs.push_back(lp.abscissa(k));
            ys.push_back(lp.levels[k]);
        }
        UniPoly p = newton_interpolate(xs, ys);
        double residual = 0.0;
        for (long long k = 0; k <= n; ++k) {
            residual = std::max(residual, std::abs(p.eval(lp.abscissa(k)) - lp.levels[k]));
        }
        if (residual <= 1e-8) {
            p.trim(deg_tol);
            return p;
        }
    }
    throw InconsistentProfile("to_univariate: no polynomial of degree <= min(n,128) fits within 1e-8");
}

LevelProfile from_univariate(const UniPoly& p, long long n) {
    if (p.degree() > n) throw DegreeTooHigh("from_univariate: deg p > n");
    LevelProfile lp;
    lp.n = n;
    lp.levels.resize(n + 1);
    for (long long k = 0; k <= n; ++k) lp.levels[k] = p.eval(lp.abscissa(k));
    return lp;
}

double symmetric_total_influence(const LevelProfile& lp) {
    const long long n = lp.n;
    const double log2 = std::log(2.0);
    double inf = 0.0;
    for (long long w = 0; w < n; ++w) {
        // adjacent-level difference first, then the binomial weight
        const double diff = std::abs(lp.levels[w] - lp.levels[w + 1]) / 2.0;
        if (diff == 0.0) continue;
        const double logw = log_binomial(n - 1, w) - static_cast<double>(n - 1) * log2;
        inf += std::exp(logw) * static_cast<double>(n) * diff;
    }
    return inf;
}

double symmetric_delta_at_one(const UniPoly& p, long long n) {
    return static_cast<double>(n) *
           std::abs(p.eval(1.0) - p.eval(1.0 - 2.0 / static_cast<double>(n))) / 2.0;
}

double level_first_level_sum(const LevelProfile& lp) {
    const long long n = lp.n;
    const double log2 = std::log(2.0);
    double s = 0.0;
    for (long long w = 0; w <= n; ++w) {
        if (lp.levels[w] == 0.0 || n == 2 * w) continue;
        const double logw = log_binomial(n, w) - static_cast<double>(n) * log2;
        s += std::exp(logw) * static_cast<double>(n - 2 * w) * lp.levels[w];
    }
    return s;
}

SymmetricReport symmetric_bound_report(const LevelProfile& lp) {
    SymmetricReport rep;
    rep.n = lp.n;
    rep.influence = symmetric_total_influence(lp);
    const UniPoly p = to_univariate(lp);
    const int d = std::max(p.degree(), 0);
    rep.degree = d;
    rep.sup_norm_p = sup_norm(p);
    rep.reference = static_cast<double>(d);
    rep.slack = rep.reference - rep.influence;
    rep.regime_ok = lp.n > static_cast<long long>(d) * d;
    if (rep.regime_ok && d >= 1) {
        rep.norm_bound =
            static_cast<double>(lp.n) / static_cast<double>(lp.n - static_cast<long long>(d) * d);
        rep.norm_certified = rep.sup_norm_p <= rep.norm_bound * (1.0 + 1e-9);
    } else if (d == 0) {
        rep.norm_bound = 1.0;
        rep.norm_certified = true;
        rep.regime_ok = true;
    } else {
        rep.note = "n <= d^2: sup-norm lemma inapplicable";
    }
    if (d >= 2) {
        const double dn = static_cast<double>(lp.n);
        const double d4 = std::pow(static_cast<double>(d), 4.0);
        rep.strong_regime = dn >= 64.0 * d4 * std::log(static_cast<double>(d));
        rep.strong_t = std::sqrt(dn) * (1.0 / (4.0 * d * d) - 2.0 / dn);
    }
    return rep;
}

}  // namespace cubefun

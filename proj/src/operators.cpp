#include "cubefun/operators.hpp"

#include <bit>
#include <cmath>

#include "cubefun/errors.hpp"

namespace cubefun {

double BiPoly::eval(double x, double y) const {
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        double row = 0.0;
        for (std::size_t k = coeffs[j].size(); k-- > 0;) {
            row = row * y + coeffs[j][k];
        }
        acc = acc * x + row;
    }
    return acc;
}

int BiPoly::total_degree() const {
    int deg = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        for (std::size_t k = 0; k < coeffs[j].size(); ++k) {
            if (coeffs[j][k] != 0.0) deg = std::max(deg, static_cast<int>(j + k));
        }
    }
    return deg;
}

CubeFunction noise(const CubeFunction& f, double rho) {
    FourierExpansion e = fourier(f);
    for (std::size_t mask = 0; mask < e.coeffs.size(); ++mask) {
        e.coeffs[mask] *= std::pow(rho, std::popcount(static_cast<std::uint32_t>(mask)));
    }
    return synthesize(e);
}

namespace {

// mean of f over each Hamming-weight class
std::vector<double> weight_means(const CubeFunction& f) {
    std::vector<double> sums(f.n + 1, 0.0);
    std::vector<double> counts(f.n + 1, 0.0);
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        const int w = std::popcount(static_cast<std::uint32_t>(idx));
        sums[w] += f.values[idx];
        counts[w] += 1.0;
    }
    for (int w = 0; w <= f.n; ++w) sums[w] /= counts[w];
    return sums;
}

}  // namespace

LevelProfile symmetrize(const CubeFunction& f) {
    LevelProfile lp;
    lp.n = f.n;
    lp.levels = weight_means(f);
    return lp;
}

LevelProfile symmetrize_m(const CubeFunction& f, long long m) {
    if (m < f.n) throw BadM("symmetrize_m: m >= n required");
    if (m == f.n) return symmetrize(f);
    const std::vector<double> avg = weight_means(f);
    const int n = f.n;
    LevelProfile lp;
    lp.n = m;
    lp.levels.assign(m + 1, 0.0);
    for (long long j = 0; j <= m; ++j) {
        const double log_cmj = log_binomial(m, j);
        double level = 0.0;
        for (int w = 0; w <= n; ++w) {
            // probability that w of the j minus-ones land in the first n coords
            const double lw = log_binomial(n, w) + log_binomial(m - n, j - w) - log_cmj;
            if (std::isinf(lw)) continue;
            level += std::exp(lw) * avg[w];
        }
        lp.levels[j] = level;
    }
    return lp;
}

BiPoly collapse_partition(const CubeFunction& f, std::uint32_t s_mask) {
    const std::uint32_t all = (f.n == 32) ? ~0u : ((1u << f.n) - 1u);
    s_mask &= all;
    const int ds = std::popcount(s_mask);
    const int dc = f.n - ds;
    const FourierExpansion& e = f.fourier();
    BiPoly g;
    g.coeffs.assign(ds + 1, std::vector<double>(dc + 1, 0.0));
    for (std::size_t mask = 0; mask < e.coeffs.size(); ++mask) {
        const double c = e.coeffs[mask];
        if (c == 0.0) continue;
        const auto t = static_cast<std::uint32_t>(mask);
        g.coeffs[std::popcount(t & s_mask)][std::popcount(t & ~s_mask & all)] += c;
    }
    return g;
}

UniPoly diag_line(const BiPoly& g, DiagMode mode) {
    switch (mode) {
        case DiagMode::x_line: {
            UniPoly h;
            h.coeffs.assign(g.coeffs.size(), 0.0);
            for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
                for (double c : g.coeffs[j]) h.coeffs[j] += c;
            }
            h.trim();
            return h;
        }
        case DiagMode::y_line: {
            std::size_t dc = 0;
            for (const auto& row : g.coeffs) dc = std::max(dc, row.size());
            UniPoly h;
            h.coeffs.assign(dc, 0.0);
            for (const auto& row : g.coeffs) {
                for (std::size_t k = 0; k < row.size(); ++k) h.coeffs[k] += row[k];
            }
            h.trim();
            return h;
        }
        case DiagMode::plus_minus: {
            const UniPoly one_plus{{1.0, 1.0}};
            const UniPoly one_minus{{1.0, -1.0}};
            UniPoly h;
            // powers built incrementally over rows/cols
            std::vector<UniPoly> plus_pow{UniPoly::constant(1.0)};
            std::vector<UniPoly> minus_pow{UniPoly::constant(1.0)};
            for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
                if (j > 0) plus_pow.push_back(plus_pow.back() * one_plus);
                for (std::size_t k = 0; k < g.coeffs[j].size(); ++k) {
                    while (minus_pow.size() <= k) minus_pow.push_back(minus_pow.back() * one_minus);
                    if (g.coeffs[j][k] == 0.0) continue;
                    h = h + plus_pow[j] * minus_pow[k] * g.coeffs[j][k];
                }
            }
            h.trim();
            return h;
        }
    }
    throw BadParam("diag_line: unknown mode");
}

}  // namespace cubefun

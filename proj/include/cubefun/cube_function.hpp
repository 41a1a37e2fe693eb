#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cubefun {

inline constexpr int kMaxVariables = 24;
inline constexpr double kDegTol = 1e-9;

/// Fourier coefficients of a function on {-1,1}^n. Stored densely, indexed by
/// the subset bitmask; bit k of the mask corresponds to variable x_{k+1}.
struct FourierExpansion {
    int n = 0;
    std::vector<double> coeffs;  // length 2^n

    double at(std::uint32_t mask) const { return coeffs[mask]; }
    int degree(double tol = kDegTol) const;
    double parseval_sum() const;  // sum of squared coefficients
    // sum over singletons of f_hat({i})
    double first_level_sum() const;
};

/// Dense truth table over {-1,1}^n. Bit k of the point index equal to 0 means
/// x_{k+1} = +1, equal to 1 means x_{k+1} = -1; index 0 is the all-ones point.
struct CubeFunction {
    int n = 0;
    std::vector<double> values;  // length 2^n

    std::size_t size() const { return values.size(); }
    double at(std::size_t idx) const { return values[idx]; }
    double sup_norm() const;
    double mean() const;
    double lp_norm(double p) const;  // E|f|^p ^ (1/p)
    double l1_norm() const { return lp_norm(1.0); }

    const FourierExpansion& fourier() const;

  private:
    mutable std::shared_ptr<const FourierExpansion> fourier_cache_;
};

struct PropertyFlags {
    bool boolean_valued = false;
    bool bounded_by_one = false;
    bool homogeneous = false;
    bool symmetric = false;
    bool monotone = false;
    int degree = 0;
    double sup_norm = 0.0;
};

CubeFunction from_truth_table(int n, std::vector<double> values);

FourierExpansion fourier(const CubeFunction& f);
CubeFunction synthesize(const FourierExpansion& e);

PropertyFlags classify(const CubeFunction& f, double tol = kDegTol);

// In-place Walsh-Hadamard butterfly; forward applies 1/2^n once.
void fwht(std::vector<double>& data, bool forward);

}  // namespace cubefun

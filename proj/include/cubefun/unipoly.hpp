#pragma once

#include <string>
#include <vector>

namespace cubefun {

/// Univariate real polynomial in the monomial basis, coeffs[j] is the
/// coefficient of x^j.
struct UniPoly {
    std::vector<double> coeffs;

    UniPoly() = default;
    explicit UniPoly(std::vector<double> c) : coeffs(std::move(c)) {}

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(double c) { return UniPoly{{c}}; }
    static UniPoly identity() { return UniPoly{{0.0, 1.0}}; }

    // Degree after dropping trailing coefficients below tol; -1 for zero.
    int degree(double tol = 0.0) const;
    bool is_zero() const { return degree() < 0; }

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;

    UniPoly derivative() const;
    UniPoly antiderivative() const;  // constant term 0

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(double s) const;

    void trim(double tol = 0.0);
};

UniPoly chebyshev(int d);

// Jacobi polynomial via the explicit sum; requires alpha, beta > -1.
UniPoly jacobi(int d, double alpha, double beta);

// Value of the Jacobi polynomial at a point via the three-term recurrence.
// Stable for d well beyond what the monomial expansion can represent.
double jacobi_value(int d, double alpha, double beta, double x);

// L2 norm squared of J_d^{alpha,beta} against its weight (1-x)^a (1+x)^b.
double jacobi_squared_norm(int d, double alpha, double beta);

enum class KlurmanKind { S, H, F };

// Monotone-derivative densities built from sums of squared Jacobi
// polynomials: S_d = (1+x) sum (J_i^{0,1})^2, H_d = (1-x^2) sum (J_i^{1,1})^2
// over i < d, F_d = sum (J_i^{0,0})^2.
UniPoly klurman_family(KlurmanKind kind, int index);

// Same sums with each Jacobi polynomial normalized to unit weighted L2 norm,
// evaluated pointwise by recurrence. This is the Christoffel-kernel form;
// it grows linearly in the index, the raw sums above only logarithmically.
double klurman_kernel_value(KlurmanKind kind, int index, double x);

// Upper bound on |p'(x0)| for monotone degree-d polynomials with sup norm 1:
// 2 max(S_k(x0), S_k(-x0)) for d = 2k+2, 2 max(F_k(x0), H_k(x0)) for d = 2k+1,
// with the orthonormalized families.
double klurman_derivative_bound(int d, double x0);

// Extremal derivative value at 0 for monotone degree-d polynomials,
// asymptotically d/(2 pi). Equals klurman_derivative_bound(d, 0) / 2.
double klurman_reference(int d);

// max |p| over [lo, hi], critical points isolated by sign changes of p' on a
// dense Chebyshev-node grid followed by bisection. Merged double roots of p'
// are covered by the grid evaluations themselves.
double sup_norm(const UniPoly& p, double tol = 1e-12, double lo = -1.0, double hi = 1.0);

// Signed max and min of p over [lo, hi], same method.
struct Extrema {
    double min;
    double max;
};
Extrema extrema(const UniPoly& p, double tol = 1e-12, double lo = -1.0, double hi = 1.0);

// min(d^2, d / sqrt(1 - x^2)), with d^2 at |x| = 1.
double bernstein_markov_bound(int d, double x);

std::string to_string(const UniPoly& p);

}  // namespace cubefun

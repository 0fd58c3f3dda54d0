#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trapsusy {

using RealFunction = std::function<double(double)>;

/// Raised when an iterative routine exhausts its budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Uniform radial grid on [r_min, r_max] with `points` nodes.
class Grid {
public:
    Grid(double r_min, double r_max, std::size_t points);

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    std::size_t points() const { return points_; }
    double spacing() const { return spacing_; }
    double operator[](std::size_t i) const { return r_min_ + spacing_ * static_cast<double>(i); }

    std::vector<double> nodes() const;
    Grid scaled(double factor) const { return Grid(r_min_ * factor, r_max_ * factor, points_); }

private:
    double r_min_;
    double r_max_;
    std::size_t points_;
    double spacing_;
};

/// Generalized Laguerre polynomial L^(alpha)_degree(z) by upward recurrence.
double laguerre(int degree, double alpha, double z);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Adaptive Gauss-Kronrod (7/15) quadrature with absolute tolerance `tol`.
/// Throws ConvergenceError when the interval budget runs out.
double integrate(const RealFunction& f, double a, double b, double tol = 1e-10);

/// Three-point central second difference.
double second_derivative(const RealFunction& f, double r, double h);

/// Five-point central first and second differences, O(h^4).
double derivative5(const RealFunction& f, double r, double h);
double second_derivative5(const RealFunction& f, double r, double h);

struct TridiagEigen {
    std::vector<double> values;                 // ascending
    std::vector<std::vector<double>> vectors;   // unit 2-norm, one per value
};

/// k smallest eigenpairs of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal (size n and n-1). Sturm bisection for values,
/// inverse iteration for vectors.
TridiagEigen tridiag_eigen(std::span<const double> diagonal, std::span<const double> off_diagonal,
                           std::size_t k, bool want_vectors = true);

/// Number of eigenvalues strictly below x (Sturm sequence count).
std::size_t sturm_count(std::span<const double> diagonal, std::span<const double> off_diagonal,
                        double x);

} // namespace trapsusy

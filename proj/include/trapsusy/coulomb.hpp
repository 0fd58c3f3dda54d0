#pragma once

#include "trapsusy/radial_function.hpp"

#include <functional>
#include <map>
#include <utility>

namespace trapsusy {

/// (d, n, l) for the d-dimensional Coulomb problem, d > 1, 0 <= l < n.
class CoulombQN {
public:
    CoulombQN(int dimension, int principal, int angular);

    int dimension() const { return dimension_; }
    int principal() const { return principal_; }
    int angular() const { return angular_; }
    /// (d - 3)/2, zero in three dimensions.
    double gamma() const { return 0.5 * (dimension_ - 3); }

private:
    int dimension_;
    int principal_;
    int angular_;
};

/// Coulomb-side quantum defect delta(n, l), integral shift i(l) and the
/// ground-state energy E0 of the Rydberg series.
struct CoulombDefect {
    std::function<double(int n, int l)> delta = [](int, int) { return 0.0; };
    std::function<int(int l)> i_shift = [](int) { return 0; };
    double ground_energy = -0.5;

    double effective_n(int n, int l) const { return n - delta(n, l); }

    static CoulombDefect none(double ground_energy = -0.5);
    static CoulombDefect constant(double delta, double ground_energy = -0.5);
    /// delta depends on l only; missing l default to 0.
    static CoulombDefect per_l(std::map<int, double> table, double ground_energy = -0.5);
    /// delta(n, l) looked up; missing entries fall back to the per-l value.
    static CoulombDefect per_nl(std::map<std::pair<int, int>, double> table,
                                std::map<int, double> asymptotic = {},
                                double ground_energy = -0.5);
};

/// Reduced radial function
///   C rho^(l+gamma+1) exp(-rho/(nu a)) L^(2l+2gamma+1)_(n-l-1)(2 rho/(nu a)),
/// nu = n + gamma, a = Bohr radius (1 in atomic units), normalized on d rho.
RadialFunction coulomb_wavefunction(const CoulombQN& qn, double bohr_radius = 1.0);

/// Bound-state energy -1/(2 (n+gamma)^2) in atomic units, Bohr radius 1.
double coulomb_energy(const CoulombQN& qn);

/// E0 / (n - delta(n, l))^2
double rydberg_energy(const CoulombDefect& defect, int n, int l);

/// Radius past which |w_{d,n,l}| is negligible: nu a (2 nu + 40).
double coulomb_cutoff(const CoulombQN& qn, double bohr_radius = 1.0);

} // namespace trapsusy

#include "trapsusy/coulomb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trapsusy {

CoulombQN::CoulombQN(int dimension, int principal, int angular)
    : dimension_(dimension), principal_(principal), angular_(angular) {
    if (dimension <= 1)
        throw std::invalid_argument("CoulombQN: dimension d must be > 1");
    if (principal < 1)
        throw std::invalid_argument("CoulombQN: principal n must be >= 1");
    if (angular < 0 || angular >= principal)
        throw std::invalid_argument("CoulombQN: need 0 <= l <= n - 1 (got n=" +
                                    std::to_string(principal) + ", l=" + std::to_string(angular) +
                                    ")");
}

CoulombDefect CoulombDefect::none(double ground_energy) {
    CoulombDefect d;
    d.ground_energy = ground_energy;
    return d;
}

CoulombDefect CoulombDefect::constant(double delta, double ground_energy) {
    CoulombDefect d;
    d.delta = [delta](int, int) { return delta; };
    d.ground_energy = ground_energy;
    return d;
}

CoulombDefect CoulombDefect::per_l(std::map<int, double> table, double ground_energy) {
    CoulombDefect d;
    d.delta = [table = std::move(table)](int, int l) {
        const auto it = table.find(l);
        return it == table.end() ? 0.0 : it->second;
    };
    d.ground_energy = ground_energy;
    return d;
}

CoulombDefect CoulombDefect::per_nl(std::map<std::pair<int, int>, double> table,
                                    std::map<int, double> asymptotic, double ground_energy) {
    CoulombDefect d;
    d.delta = [table = std::move(table), asymptotic = std::move(asymptotic)](int n, int l) {
        if (const auto it = table.find({n, l}); it != table.end()) return it->second;
        const auto it = asymptotic.find(l);
        return it == asymptotic.end() ? 0.0 : it->second;
    };
    d.ground_energy = ground_energy;
    return d;
}

RadialFunction coulomb_wavefunction(const CoulombQN& qn, double bohr_radius) {
    if (!(bohr_radius > 0.0))
        throw std::invalid_argument("coulomb_wavefunction: Bohr radius must be > 0");
    const int n = qn.principal();
    const int l = qn.angular();
    const double gamma = qn.gamma();
    const double nu = n + gamma;
    const int degree = n - l - 1;
    const double alpha = 2.0 * l + 2.0 * gamma + 1.0;
    const double power = l + gamma + 1.0;
    const double scale = nu * bohr_radius;

    // int rho^(alpha+1) e^(-2rho/scale) L^2 = (scale/2)^(alpha+2) * 2 nu * Gamma(k+alpha+1)/k!
    const double log_integral = (alpha + 2.0) * std::log(0.5 * scale) + std::log(2.0 * nu) +
                                log_gamma(degree + alpha + 1.0) - log_gamma(degree + 1.0);
    const double norm = std::exp(-0.5 * log_integral);

    RealFunction eval = [=](double rho) {
        const double x = rho / scale;
        return norm * std::pow(rho, power) * std::exp(-x) * laguerre(degree, alpha, 2.0 * x);
    };
    return RadialFunction(std::move(eval), power, norm,
                          FamilyParams{static_cast<double>(qn.dimension()), static_cast<double>(n),
                                       static_cast<double>(l)},
                          degree, bohr_radius);
}

double coulomb_energy(const CoulombQN& qn) {
    const double nu = qn.principal() + qn.gamma();
    return -0.5 / (nu * nu);
}

double rydberg_energy(const CoulombDefect& defect, int n, int l) {
    const double n_star = defect.effective_n(n, l);
    if (!(n_star > 0.0))
        throw std::invalid_argument("rydberg_energy: effective quantum number n* = " +
                                    std::to_string(n_star) + " must be > 0");
    return defect.ground_energy / (n_star * n_star);
}

double coulomb_cutoff(const CoulombQN& qn, double bohr_radius) {
    const double nu = qn.principal() + qn.gamma();
    return nu * bohr_radius * (2.0 * nu + 40.0);
}

} // namespace trapsusy

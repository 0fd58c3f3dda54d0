#include "trapsusy/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace trapsusy {

PhysicalScales::PhysicalScales(double hbar, double mass, double trap_depth, double length_scale)
    : hbar_(hbar), mass_(mass), trap_depth_(trap_depth), length_scale_(length_scale) {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(trap_depth > 0.0) || !(length_scale > 0.0))
        throw std::invalid_argument("PhysicalScales: hbar, mass, mu*B0 and r0 must all be > 0");
    omega0_ = std::sqrt(2.0 * trap_depth / (mass * length_scale * length_scale));
    oscillator_length_ = std::sqrt(hbar / (mass * omega0_));
}

OscillatorQN::OscillatorQN(int dimension, int principal, int angular)
    : dimension_(dimension), principal_(principal), angular_(angular) {
    if (dimension < 1)
        throw std::invalid_argument("OscillatorQN: dimension D must be >= 1");
    if (angular < 0)
        throw std::invalid_argument("OscillatorQN: angular momentum L must be >= 0");
    if (principal < angular || (principal - angular) % 2 != 0)
        throw std::invalid_argument("OscillatorQN: need N = L, L+2, L+4, ... (got N=" +
                                    std::to_string(principal) + ", L=" + std::to_string(angular) +
                                    ")");
}

RealFunction trap_potential(const PhysicalScales& scales) {
    const double depth = scales.trap_depth();
    const double r0 = scales.length_scale();
    return [depth, r0](double r) { return depth * (1.0 + r * r / (r0 * r0)); };
}

RadialFunction oscillator_family(const PhysicalScales& scales, double dimension, double principal,
                                 double angular) {
    const double half_degree = 0.5 * (principal - angular);
    const double rounded = std::round(half_degree);
    if (std::abs(half_degree - rounded) > 1e-9 || rounded < 0.0)
        throw std::invalid_argument("oscillator family: (N - L)/2 must be a nonnegative integer (got " +
                                    std::to_string(half_degree) + ")");
    const int degree = static_cast<int>(rounded);
    const double alpha = angular + 0.5 * dimension - 1.0;
    if (!(alpha > -1.0))
        throw std::invalid_argument("oscillator family: Laguerre parameter L + D/2 - 1 = " +
                                    std::to_string(alpha) + " must be > -1 (not normalizable)");
    const double power = alpha + 0.5;
    const double b = scales.oscillator_length();
    const double log_norm =
        0.5 * (std::log(2.0) + log_gamma(degree + 1.0) - log_gamma(degree + alpha + 1.0) - std::log(b));
    const double norm = std::exp(log_norm);

    RealFunction eval = [=](double r) {
        const double x = r / b;
        const double z = x * x;
        return norm * std::pow(x, power) * std::exp(-0.5 * z) * laguerre(degree, alpha, z);
    };
    return RadialFunction(std::move(eval), power, norm, FamilyParams{dimension, principal, angular},
                          degree, b);
}

RadialFunction oscillator_wavefunction(const PhysicalScales& scales, const OscillatorQN& qn) {
    return oscillator_family(scales, qn.dimension(), qn.principal(), qn.angular());
}

double oscillator_energy(const PhysicalScales& scales, int dimension, double principal_star) {
    if (!(principal_star + 0.5 * dimension > 0.0))
        throw std::invalid_argument("oscillator_energy: need N* + D/2 > 0");
    return scales.trap_depth() + scales.hbar_omega() * (principal_star + 0.5 * dimension);
}

double oscillator_cutoff(const PhysicalScales& scales, double principal) {
    return scales.oscillator_length() * (std::sqrt(std::max(2.0 * principal + 3.0, 0.0)) + 8.0);
}

NodeCount count_nodes(const RadialFunction& w, const Grid& grid) {
    const std::vector<double> r = grid.nodes();
    std::vector<double> v(r.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        v[i] = w(r[i]);
        peak = std::max(peak, std::abs(v[i]));
    }

    NodeCount out;
    int last_sign = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0) continue;
        const int sign = v[i] > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++out.nodes;
        last_sign = sign;
    }
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (std::abs(v[i]) <= 1e-12 * peak && v[i - 1] * v[i + 1] < 0.0) {
            out.warning = "node within 1e-12 of a grid point near r = " + std::to_string(r[i]);
            break;
        }
    }
    return out;
}

} // namespace trapsusy

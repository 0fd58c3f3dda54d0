#include "trapsusy/susy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trapsusy {

namespace {

void require_nodeless(const RadialFunction& ground) {
    const double u = ground.length_unit();
    const double reach = u * (std::sqrt(std::max(2.0 * ground.family().principal + 3.0, 0.0)) + 6.0);
    const NodeCount nodes = count_nodes(ground, Grid(1e-4 * u, reach, 2000));
    if (ground.radial_degree() != 0 || nodes.nodes != 0)
        throw std::invalid_argument(
            "superpotential: ground state has nodes; its logarithmic derivative is undefined");
}

// Step for differentiating ln psi: small against both r and the natural length.
double log_step(double r, double unit) { return 2e-3 * std::min(r, unit); }

} // namespace

Potential1D bosonic_potential(const PhysicalScales& scales, int angular) {
    if (angular < 0)
        throw std::invalid_argument("bosonic_potential: L must be >= 0");
    const RealFunction trap = trap_potential(scales);
    const double centrifugal = scales.kinetic() * angular * (angular + 1);
    const double ground = oscillator_energy(scales, 3, angular);
    return Potential1D{[=](double r) { return trap(r) + centrifugal / (r * r) - ground; }, ground};
}

RealFunction superpotential(const RadialFunction& ground, const PhysicalScales& scales) {
    require_nodeless(ground);
    const double prefactor = scales.hbar() / std::sqrt(2.0 * scales.mass());
    const double unit = ground.length_unit();
    RealFunction log_psi = [ground](double r) { return std::log(std::abs(ground(r))); };
    return [=](double r) { return -prefactor * derivative5(log_psi, r, log_step(r, unit)); };
}

Potential1D partner_potential(const Potential1D& v1, const RadialFunction& ground,
                              const PhysicalScales& scales) {
    require_nodeless(ground);
    const double coupling = scales.hbar() * scales.hbar() / scales.mass();
    const double unit = ground.length_unit();
    RealFunction log_psi = [ground](double r) { return std::log(std::abs(ground(r))); };
    RealFunction base = v1.evaluator;
    return Potential1D{
        [=](double r) {
            return base(r) - coupling * second_derivative5(log_psi, r, log_step(r, unit));
        },
        v1.ground_energy_offset};
}

RealFunction lowering_operator(const RadialFunction& ground, const PhysicalScales& scales,
                               const RealFunction& psi) {
    const RealFunction w = superpotential(ground, scales);
    const double prefactor = scales.hbar() / std::sqrt(2.0 * scales.mass());
    const double unit = ground.length_unit();
    return [=](double r) {
        return prefactor * derivative5(psi, r, log_step(r, unit)) + w(r) * psi(r);
    };
}

RadialFunction fermionic_wavefunction(const PhysicalScales& scales, int angular, int principal_s) {
    if (angular < 0)
        throw std::invalid_argument("fermionic_wavefunction: L must be >= 0");
    if (principal_s < angular + 2 || (principal_s - angular) % 2 != 0)
        throw std::invalid_argument("fermionic_wavefunction: need N_s = L+2, L+4, ... (got N_s=" +
                                    std::to_string(principal_s) + ", L=" + std::to_string(angular) +
                                    ")");
    RadialFunction w = oscillator_wavefunction(scales, OscillatorQN(3, principal_s - 1, angular + 1));
    w.angular_label = angular;
    return w;
}

std::uint64_t level_degeneracy(int principal, int spin_states) {
    if (principal < 0)
        throw std::invalid_argument("level_degeneracy: N must be >= 0");
    const auto n = static_cast<std::uint64_t>(principal);
    return static_cast<std::uint64_t>(spin_states) * (n + 1) * (n + 2) / 2;
}

CoreCount core_count(int angular, int iterations, int spin_states) {
    if (angular < 0 || iterations < 1)
        throw std::invalid_argument("core_count: need L >= 0 and s >= 1");
    const long long top = 2LL * iterations - angular + 2;
    CoreCount out;
    if (top < 3) {
        out.warning = "no core states below the valence floor for L=" + std::to_string(angular) +
                      ", s=" + std::to_string(iterations);
        return out;
    }
    const auto m = static_cast<std::uint64_t>(top);
    out.count = static_cast<std::uint64_t>(spin_states) * (m * (m - 1) * (m - 2) / 6);
    return out;
}

std::uint64_t core_count_enumerated(int angular, int iterations, int spin_states) {
    std::uint64_t states = 0;
    const int top_level = 2 * iterations - angular - 1;
    for (int n = 0; n <= top_level; ++n)
        for (int l = n % 2; l <= n; l += 2)
            for (int m = -l; m <= l; ++m)
                for (int spin = 0; spin < spin_states; ++spin) ++states;
    return states;
}

SectorSpec iterate_sector(const PhysicalScales& scales, int angular, int iterations) {
    if (angular < 0 || iterations < 0)
        throw std::invalid_argument("iterate_sector: need L >= 0 and s >= 0");
    SectorSpec spec;
    spec.angular = angular;
    spec.iterations = iterations;
    spec.valence_min_n = angular + 2 * iterations;
    spec.core_count = iterations > 0 ? core_count(angular, iterations).count : 0;
    spec.potential = bosonic_potential(scales, angular);

    for (int step = 0; step < iterations; ++step) {
        // The nodeless state of the current sector is the lowest oscillator
        // state of the shifted tower, W_{L+step, L+step}.
        const RadialFunction ground =
            oscillator_wavefunction(scales, OscillatorQN(3, angular + step, angular + step));
        const Potential1D partner = partner_potential(spec.potential, ground, scales);
        // Lowest partner level sits one level spacing (2 hbar omega0) up.
        const double gap = oscillator_energy(scales, 3, angular + step + 2) -
                           oscillator_energy(scales, 3, angular + step);
        RealFunction shifted = [f = partner.evaluator, gap](double r) { return f(r) - gap; };
        spec.potential = Potential1D{std::move(shifted), partner.ground_energy_offset + gap};
        spec.energy_offset += gap;
    }
    return spec;
}

} // namespace trapsusy

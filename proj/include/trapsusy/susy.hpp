#pragma once

#include "trapsusy/oscillator.hpp"
#include "trapsusy/potential.hpp"
#include "trapsusy/radial_function.hpp"
#include "trapsusy/scales.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace trapsusy {

/// U(r) + hbar^2 L(L+1)/(2 m r^2) - E_ground(L): the fixed-L radial problem
/// with its lowest level moved to zero.
Potential1D bosonic_potential(const PhysicalScales& scales, int angular);

/// W(r) = -(hbar/sqrt(2m)) d/dr ln ground(r), by five-point differences.
/// Throws if `ground` has nodes.
RealFunction superpotential(const RadialFunction& ground, const PhysicalScales& scales);

/// V2(r) = V1(r) - (hbar^2/m) d^2/dr^2 ln ground(r). `ground` must be the
/// nodeless zero-energy state of v1. Works for any such pair, not only the
/// oscillator.
Potential1D partner_potential(const Potential1D& v1, const RadialFunction& ground,
                              const PhysicalScales& scales);

/// A psi = (hbar/sqrt(2m)) psi' + W psi for the superpotential built from `ground`.
RealFunction lowering_operator(const RadialFunction& ground, const PhysicalScales& scales,
                               const RealFunction& psi);

/// Fermionic-sector radial function W_{N_s-1, L+1}, with L kept as the
/// angular label. N_s = L+2, L+4, ...
RadialFunction fermionic_wavefunction(const PhysicalScales& scales, int angular, int principal_s);

/// Number of M-states at oscillator level N: (N+1)(N+2)/2 per spin state.
std::uint64_t level_degeneracy(int principal, int spin_states = 1);

struct CoreCount {
    std::uint64_t count = 0;
    std::optional<std::string> warning;
};

/// Fermions in a filled core below a valence fermion of angular momentum L
/// after s shell-filling iterations: every level N <= 2s - L - 1 is full,
/// C(2s - L + 2, 3) per spin state.
CoreCount core_count(int angular, int iterations, int spin_states = 1);

/// Same count by walking every |N, L', M> state explicitly.
std::uint64_t core_count_enumerated(int angular, int iterations, int spin_states = 1);

struct SectorSpec {
    int angular = 0;
    int iterations = 0;
    int valence_min_n = 0;
    std::uint64_t core_count = 0;
    /// Energy removed by the shift-to-zero steps, E(L+2s) - E(L).
    double energy_offset = 0.0;
    /// Effective potential after s partner-and-shift steps (lowest level at 0).
    Potential1D potential;
};

SectorSpec iterate_sector(const PhysicalScales& scales, int angular, int iterations);

} // namespace trapsusy

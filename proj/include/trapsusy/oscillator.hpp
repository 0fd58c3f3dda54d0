#pragma once

#include "trapsusy/numerics.hpp"
#include "trapsusy/radial_function.hpp"
#include "trapsusy/scales.hpp"

#include <optional>
#include <string>

namespace trapsusy {

/// (D, N, L) with N >= L, N - L even.
class OscillatorQN {
public:
    OscillatorQN(int dimension, int principal, int angular);

    int dimension() const { return dimension_; }
    int principal() const { return principal_; }
    int angular() const { return angular_; }
    int radial_degree() const { return (principal_ - angular_) / 2; }
    /// Number of M values for the three-dimensional angular factor.
    int multiplicity() const { return 2 * angular_ + 1; }

private:
    int dimension_;
    int principal_;
    int angular_;
};

/// r -> mu*B0 (1 + r^2/r0^2)
RealFunction trap_potential(const PhysicalScales& scales);

/// Oscillator-type radial function with real parameters:
///   C (r/b)^(L + (D-1)/2) exp(-r^2/2b^2) L^(L + D/2 - 1)_k (r^2/b^2),
/// k = (N - L)/2, normalized on dr. Shared by the bosonic, fermionic and
/// defect sectors.
RadialFunction oscillator_family(const PhysicalScales& scales, double dimension, double principal,
                                 double angular);

RadialFunction oscillator_wavefunction(const PhysicalScales& scales, const OscillatorQN& qn);

/// mu*B0 + hbar*omega0 (N* + D/2)
double oscillator_energy(const PhysicalScales& scales, int dimension, double principal_star);

/// Radius beyond which the Gaussian envelope of level N is negligible:
/// b (sqrt(2N + 3) + 8).
double oscillator_cutoff(const PhysicalScales& scales, double principal);

struct NodeCount {
    int nodes = 0;
    std::optional<std::string> warning;
};

/// Strict sign changes of w sampled on the grid.
NodeCount count_nodes(const RadialFunction& w, const Grid& grid);

} // namespace trapsusy

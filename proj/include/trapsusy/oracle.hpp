#pragma once

#include "trapsusy/numerics.hpp"
#include "trapsusy/potential.hpp"
#include "trapsusy/radial_function.hpp"
#include "trapsusy/scales.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trapsusy {

/// Finite-difference spectrum of -(hbar^2/2m) d^2/dr^2 + V(r).
///
/// The unknowns sit on the interior grid nodes; psi = 0 at r_min and r_max.
/// `eigenvalues` are the raw three-point values (error O(h^2)).
/// `corrected` adds the leading truncation term of the stencil,
/// (hbar^2/2m)(h^2/12) ||D2 psi||^2, evaluated on the discrete eigenvector,
/// which brings the error to O(h^4).
struct SpectrumReport {
    std::vector<double> eigenvalues;
    std::vector<double> corrected;
    std::vector<double> residuals;   // max |(H - E) psi| on the grid, per state
    std::vector<std::vector<double>> eigenvectors;   // on interior nodes, unit 2-norm
    std::vector<double> radii;                       // interior nodes
    Grid grid;
    std::optional<std::string> warning;
};

/// Default oracle grid: r_min = 1e-8 b, r_max = 12 b.
Grid default_oracle_grid(const PhysicalScales& scales, std::size_t points = 4000);

SpectrumReport solve_radial(const Potential1D& potential, const PhysicalScales& scales,
                            const Grid& grid, std::size_t k);

/// max over interior grid nodes of |(-(hbar^2/2m) psi'' + V psi - E psi)| / max|psi|,
/// psi'' by central differences with step `fd_step` (default 1e-4 b).
double residual(const Potential1D& potential, const RadialFunction& psi, double energy,
                const Grid& grid, const PhysicalScales& scales,
                std::optional<double> fd_step = std::nullopt);

/// Radii spread over the bulk of level N: [0.1 b, b (sqrt(2N+3) + 3)].
std::vector<double> sample_radii(const PhysicalScales& scales, double principal,
                                 std::size_t count = 50);

/// Same residual as above evaluated at explicit radii.
double residual_at(const Potential1D& potential, const RadialFunction& psi, double energy,
                   std::span<const double> radii, const PhysicalScales& scales,
                   std::optional<double> fd_step = std::nullopt);

/// |<psi_grid, w>| after normalizing both on the grid's interior nodes.
double overlap_with(const SpectrumReport& report, std::size_t state, const RadialFunction& w);

} // namespace trapsusy

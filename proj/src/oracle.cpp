#include "trapsusy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trapsusy {

Grid default_oracle_grid(const PhysicalScales& scales, std::size_t points) {
    const double b = scales.oscillator_length();
    return Grid(1e-8 * b, 12.0 * b, points);
}

SpectrumReport solve_radial(const Potential1D& potential, const PhysicalScales& scales,
                            const Grid& grid, std::size_t k) {
    if (grid.points() < 3 + k)
        throw std::invalid_argument("solve_radial: grid too small for the requested states");
    const std::size_t n = grid.points() - 2;
    const double h = grid.spacing();
    const double kin = scales.kinetic();
    const double hop = -kin / (h * h);

    SpectrumReport report{{}, {}, {}, {}, {}, grid, std::nullopt};
    report.radii.resize(n);
    std::vector<double> diag(n);
    const std::vector<double> off(n - 1, hop);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid[i + 1];
        report.radii[i] = r;
        diag[i] = 2.0 * kin / (h * h) + potential(r);
        if (!std::isfinite(diag[i]))
            throw std::domain_error("solve_radial: potential is not finite at r = " + std::to_string(r));
    }

    TridiagEigen eig = tridiag_eigen(diag, off, k, true);
    report.eigenvalues = eig.values;
    report.eigenvectors = std::move(eig.vectors);
    report.corrected.resize(k);
    report.residuals.resize(k);

    for (std::size_t j = 0; j < k; ++j) {
        const auto& v = report.eigenvectors[j];
        double d2_norm = 0.0;
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double left = i > 0 ? v[i - 1] : 0.0;
            const double right = i + 1 < n ? v[i + 1] : 0.0;
            const double d2 = (left - 2.0 * v[i] + right) / (h * h);
            d2_norm += d2 * d2;
            res = std::max(res, std::abs(-kin * d2 + (diag[i] - 2.0 * kin / (h * h)) * v[i] -
                                         report.eigenvalues[j] * v[i]));
        }
        report.corrected[j] = report.eigenvalues[j] + kin * h * h / 12.0 * d2_norm;
        report.residuals[j] = res;
    }

    // Box check on the highest requested state: the last 1% of the grid
    // should carry a negligible amplitude.
    const auto& top = report.eigenvectors.back();
    double peak = 0.0, edge = 0.0;
    const std::size_t edge_start = n - std::max<std::size_t>(1, n / 100);
    for (std::size_t i = 0; i < n; ++i) {
        peak = std::max(peak, std::abs(top[i]));
        if (i >= edge_start) edge = std::max(edge, std::abs(top[i]));
    }
    if (edge > 1e-6 * peak)
        report.warning = "state " + std::to_string(k - 1) +
                         " is not negligible at r_max; enlarge the box";
    return report;
}

double residual_at(const Potential1D& potential, const RadialFunction& psi, double energy,
                   std::span<const double> radii, const PhysicalScales& scales,
                   std::optional<double> fd_step) {
    const double h = fd_step.value_or(1e-4 * scales.oscillator_length());
    const double kin = scales.kinetic();
    double worst = 0.0, peak = 0.0;
    for (double r : radii) {
        if (r - h <= 0.0)
            throw std::invalid_argument("residual: sample radius too close to the origin");
        const double value = psi(r);
        const double d2 = second_derivative(psi.evaluator(), r, h);
        worst = std::max(worst, std::abs(-kin * d2 + (potential(r) - energy) * value));
        peak = std::max(peak, std::abs(value));
    }
    if (peak == 0.0)
        throw std::invalid_argument("residual: function vanishes on all sample radii");
    return worst / peak;
}

double residual(const Potential1D& potential, const RadialFunction& psi, double energy,
                const Grid& grid, const PhysicalScales& scales, std::optional<double> fd_step) {
    const double h = fd_step.value_or(1e-4 * scales.oscillator_length());
    std::vector<double> radii;
    radii.reserve(grid.points());
    for (std::size_t i = 1; i + 1 < grid.points(); ++i)
        if (grid[i] - h > 0.0) radii.push_back(grid[i]);
    return residual_at(potential, psi, energy, radii, scales, h);
}

std::vector<double> sample_radii(const PhysicalScales& scales, double principal, std::size_t count) {
    const double b = scales.oscillator_length();
    const double lo = 0.1 * b;
    const double hi = b * (std::sqrt(std::max(2.0 * principal + 3.0, 0.0)) + 3.0);
    std::vector<double> r(count);
    for (std::size_t i = 0; i < count; ++i)
        r[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return r;
}

double overlap_with(const SpectrumReport& report, std::size_t state, const RadialFunction& w) {
    const auto& v = report.eigenvectors.at(state);
    double dot = 0.0, ww = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double wi = w(report.radii[i]);
        dot += v[i] * wi;
        ww += wi * wi;
        vv += v[i] * v[i];
    }
    return std::abs(dot) / std::sqrt(ww * vv);
}

} // namespace trapsusy

#include "trapsusy/mapping.hpp"

#include "trapsusy/defect.hpp"
#include "trapsusy/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trapsusy {

namespace {

// Natural trap units with oscillator length c: hbar = m = 1, r0 = c.
PhysicalScales bridge_scales(double c) { return PhysicalScales(1.0, 1.0, 0.5 / (c * c), c); }

// Coulomb functions on the bridge are normalized on z in half-Bohr units,
// i.e. evaluated with Bohr radius 2.
constexpr double kBridgeBohr = 2.0;

MapReport ratio_report(const RealFunction& oscillator, const RealFunction& coulomb_of_r,
                       const Grid& grid, double threshold) {
    const std::vector<double> r = grid.nodes();
    std::vector<double> lhs(r.size()), rhs(r.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        lhs[i] = oscillator(r[i]);
        rhs[i] = coulomb_of_r(r[i]);
        peak = std::max(peak, std::abs(rhs[i]));
    }

    MapReport report;
    report.threshold = threshold;
    std::vector<double> ratios;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (std::abs(rhs[i]) < 1e-6 * peak) {
            ++report.samples_masked;
            continue;
        }
        ratios.push_back(lhs[i] / rhs[i]);
    }
    report.samples_used = ratios.size();
    if (ratios.empty()) {
        report.note = "every sample masked";
        return report;
    }
    double sum = 0.0;
    for (double q : ratios) sum += q;
    report.ratio_mean = sum / static_cast<double>(ratios.size());
    for (double q : ratios)
        report.max_relative_deviation = std::max(
            report.max_relative_deviation, std::abs(q - report.ratio_mean) / std::abs(report.ratio_mean));
    report.pass = report.max_relative_deviation <= threshold;
    if (!report.pass) report.note = "ratio not constant across the grid";
    return report;
}

} // namespace

OscillatorImage map_quantum_numbers(const CoulombQN& qn, int lambda) {
    OscillatorImage image{2 * qn.dimension() - 2 - 2 * lambda, 2 * qn.principal() - 2 + lambda,
                          2 * qn.angular() + lambda};
    if (image.dimension < 1)
        throw std::invalid_argument("map_quantum_numbers: lambda=" + std::to_string(lambda) +
                                    " gives oscillator dimension D=" +
                                    std::to_string(image.dimension) + " < 1");
    if (image.angular < 0)
        throw std::invalid_argument("map_quantum_numbers: lambda=" + std::to_string(lambda) +
                                    " gives L=" + std::to_string(image.angular) + " < 0");
    if (image.principal < image.angular)
        throw std::invalid_argument("map_quantum_numbers: image violates N >= L");
    return image;
}

int lambda_for_dimension(int coulomb_dimension, int oscillator_dimension) {
    const int twice = 2 * coulomb_dimension - 2 - oscillator_dimension;
    if (twice % 2 != 0)
        throw std::invalid_argument(
            "there is no such correspondence: D = 2d - 2 - 2*lambda is even for integer lambda, "
            "so D=" + std::to_string(oscillator_dimension) + " cannot be reached from d=" +
            std::to_string(coulomb_dimension));
    return twice / 2;
}

Grid default_map_grid(double principal, double oscillator_length) {
    const double reach = std::sqrt(std::max(2.0 * principal + 3.0, 0.0)) + 6.0;
    return Grid(1e-3 * oscillator_length, reach * oscillator_length, 400);
}

MapReport verify_exact_map(const CoulombQN& qn, int lambda, const Grid& grid,
                           double oscillator_length, double threshold) {
    const OscillatorImage image = map_quantum_numbers(qn, lambda);
    const PhysicalScales scales = bridge_scales(oscillator_length);
    const RadialFunction big_w =
        oscillator_wavefunction(scales, OscillatorQN(image.dimension, image.principal, image.angular));
    const RadialFunction small_w = coulomb_wavefunction(qn, kBridgeBohr);
    const double nu = qn.principal() + qn.gamma();
    const double c = oscillator_length;
    return ratio_report(
        big_w.evaluator(),
        [=](double r) { return small_w(nu * r * r / (c * c)) / std::sqrt(r); }, grid, threshold);
}

double predicted_map_constant(const CoulombQN& qn, int lambda, double oscillator_length) {
    const OscillatorImage image = map_quantum_numbers(qn, lambda);
    const RadialFunction big_w = oscillator_wavefunction(
        bridge_scales(oscillator_length), OscillatorQN(image.dimension, image.principal, image.angular));
    const RadialFunction small_w = coulomb_wavefunction(qn, kBridgeBohr);
    const double nu = qn.principal() + qn.gamma();
    return big_w.normalization() * std::sqrt(oscillator_length) /
           (small_w.normalization() * std::pow(nu, small_w.leading_power()));
}

DefectMap3D defect_map_3d(const CoulombQN& qn, int lambda) {
    if (qn.dimension() != 3)
        throw std::invalid_argument("defect_map_3d: requires the d=3 Coulomb problem");
    if (lambda != 0 && lambda != 1)
        throw std::invalid_argument("defect_map_3d: lambda must be 0 or 1 for d=3");
    DefectMap3D out;
    out.lambda = lambda;
    out.base = map_quantum_numbers(qn, lambda);
    out.constraint = lambda - 0.5;
    out.dim_shift = 3 - out.base.dimension;
    out.principal_star = out.base.principal - out.constraint;
    out.angular_star = out.base.angular - out.constraint;
    // Both lambda choices land on the same image.
    if (out.principal_star != 2.0 * qn.principal() - 1.5 || out.angular_star != 2.0 * qn.angular() + 0.5)
        throw std::logic_error("defect_map_3d: inconsistent shifted quantum numbers");
    out.note = "the mapping requires a nonzero defect Delta";
    return out;
}

MapReport verify_defect_map_ratio(const CoulombQN& qn, const Grid& grid, double oscillator_length,
                                  double threshold) {
    const DefectMap3D map = defect_map_3d(qn);
    const RadialFunction big_w = defect_wavefunction(bridge_scales(oscillator_length), 3,
                                                     map.principal_star, map.angular_star);
    const RadialFunction small_w = coulomb_wavefunction(qn, kBridgeBohr);
    const double n = qn.principal();
    const double c = oscillator_length;
    return ratio_report(
        big_w.evaluator(), [=](double r) { return small_w(n * r * r / (c * c)) / std::sqrt(r); },
        grid, threshold);
}

DefectMapReport verify_defect_map_3d(const CoulombQN& qn, const Grid& grid, std::size_t stack,
                                     double threshold) {
    DefectMapReport out;
    out.ratio = verify_defect_map_ratio(qn, grid, 1.0, threshold);

    const PhysicalScales scales = bridge_scales(1.0);
    const int l = qn.angular();
    for (std::size_t k = 1; k <= stack; ++k) {
        const CoulombQN state(3, l + static_cast<int>(k), l);
        const DefectMap3D map = defect_map_3d(state);
        out.oscillator_energies.push_back(oscillator_energy(scales, 3, map.principal_star));
        out.coulomb_energies.push_back(coulomb_energy(state));
    }
    bool aligned = true;
    for (std::size_t k = 1; k < stack; ++k) {
        const double osc_gap = out.oscillator_energies[k] - out.oscillator_energies[k - 1];
        aligned = aligned && osc_gap > 0.0 && out.coulomb_energies[k] > out.coulomb_energies[k - 1] &&
                  std::abs(osc_gap - 2.0 * scales.hbar_omega()) <= 1e-12;
    }
    out.stack_aligned = aligned;
    return out;
}

double general_constraint(double delta, int i_shift, int lambda) {
    return 2.0 * (delta - i_shift) + lambda - 0.5;
}

std::vector<ConsistencyRow> consistency_report(const std::vector<DefectTableRow>& table,
                                               const std::vector<int>& lambdas, int i_shift) {
    std::vector<ConsistencyRow> rows;
    for (const auto& entry : table) {
        for (int lambda : lambdas) {
            ConsistencyRow row;
            row.n = entry.n;
            row.l = entry.l;
            row.delta = entry.delta;
            row.i_shift = i_shift;
            row.lambda = lambda;
            row.implied = general_constraint(entry.delta, i_shift, lambda);
            // L* = (2l + lambda) - (Delta - I) for the D* = 3 image.
            row.angular_star = 2.0 * entry.l + lambda - row.implied;
            row.normalizable = row.angular_star + 0.5 > -1.0;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace trapsusy

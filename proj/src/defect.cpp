#include "trapsusy/defect.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trapsusy {

DefectParams DefectParams::constant(double delta, int i_shift, int dim_shift) {
    DefectParams p;
    p.delta = [delta](int, int) { return delta; };
    p.i_shift = [i_shift](int) { return i_shift; };
    p.dim_shift = dim_shift;
    return p;
}

DefectParams DefectParams::per_l(std::map<int, double> delta, int i_shift, int dim_shift) {
    DefectParams p;
    p.delta = [table = std::move(delta)](int, int l) {
        const auto it = table.find(l);
        return it == table.end() ? 0.0 : it->second;
    };
    p.i_shift = [i_shift](int) { return i_shift; };
    p.dim_shift = dim_shift;
    return p;
}

DefectParams DefectParams::per_nl(std::map<std::pair<int, int>, double> delta,
                                  std::map<int, double> fallback, int i_shift, int dim_shift) {
    DefectParams p;
    p.delta = [table = std::move(delta), fallback = std::move(fallback)](int n, int l) {
        if (const auto it = table.find({n, l}); it != table.end()) return it->second;
        const auto it = fallback.find(l);
        return it == fallback.end() ? 0.0 : it->second;
    };
    p.i_shift = [i_shift](int) { return i_shift; };
    p.dim_shift = dim_shift;
    p.delta_independent_of_n = false;
    return p;
}

ShiftedQN shifted_qn(const OscillatorQN& qn, const DefectParams& params) {
    const int n = qn.principal();
    const int l = qn.angular();
    const double delta = params.delta(n, l);
    const int shift = params.i_shift(l);

    ShiftedQN out;
    out.principal_s = n + 2 * shift;
    out.principal_star = out.principal_s - shift - delta;
    out.angular_star = l + shift - delta;
    out.dimension_star = qn.dimension() + params.dim_shift;
    out.gamma = 0.5 * (qn.dimension() - 3);
    out.gamma_star = 0.5 * (out.dimension_star - 3);
    if (out.dimension_star < 1)
        throw std::invalid_argument("shifted_qn: need D* = D + J >= 1 (got " +
                                    std::to_string(out.dimension_star) + ")");
    if (!(out.alpha_star() > -1.0))
        throw std::invalid_argument("shifted_qn: L* + D*/2 - 1 = " + std::to_string(out.alpha_star()) +
                                    " must be > -1 for a normalizable state");
    return out;
}

RealFunction effective_potential_3d(const PhysicalScales& scales, int principal, int angular,
                                    double principal_star, double angular_star) {
    const double centrifugal =
        scales.kinetic() * (angular_star * (angular_star + 1.0) - angular * (angular + 1.0));
    const double constant = scales.hbar_omega() * (principal - principal_star);
    return [=](double r) { return centrifugal / (r * r) + constant; };
}

RealFunction effective_potential_d(const PhysicalScales& scales, int dimension, int dimension_star,
                                   int principal, int angular, double principal_star,
                                   double angular_star) {
    if (dimension_star < 1)
        throw std::invalid_argument("effective_potential_d: need D* >= 1");
    const double g = 0.5 * (dimension - 3);
    const double gs = 0.5 * (dimension_star - 3);
    const double centrifugal =
        scales.kinetic() *
        ((angular_star + gs) * (angular_star + gs + 1.0) - (angular + g) * (angular + g + 1.0));
    const double constant = scales.hbar_omega() * (principal - principal_star + g - gs);
    return [=](double r) { return centrifugal / (r * r) + constant; };
}

RadialFunction defect_wavefunction(const PhysicalScales& scales, int dimension_star,
                                   double principal_star, double angular_star) {
    if (dimension_star < 1)
        throw std::invalid_argument("defect_wavefunction: need D* >= 1");
    return oscillator_family(scales, dimension_star, principal_star, angular_star);
}

RealFunction radial_potential_d(const PhysicalScales& scales, int dimension, int angular) {
    const RealFunction trap = trap_potential(scales);
    const double g = 0.5 * (dimension - 3);
    const double centrifugal = scales.kinetic() * (angular + g) * (angular + g + 1.0);
    return [=](double r) { return trap(r) + centrifugal / (r * r); };
}

std::vector<std::vector<double>> defect_gram_matrix(const PhysicalScales& scales, int angular,
                                                    const std::vector<int>& principals,
                                                    const DefectParams& params, int dimension) {
    std::vector<RadialFunction> family;
    double reach = 0.0;
    for (int n : principals) {
        const ShiftedQN s = shifted_qn(OscillatorQN(dimension, n, angular), params);
        family.push_back(defect_wavefunction(scales, s.dimension_star, s.principal_star, s.angular_star));
        reach = std::max(reach, oscillator_cutoff(scales, std::max(s.principal_star, 0.0)));
    }
    const std::size_t m = family.size();
    std::vector<std::vector<double>> gram(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const auto& a = family[i];
            const auto& b = family[j];
            gram[i][j] = gram[j][i] =
                integrate([&](double r) { return a(r) * b(r); }, 0.0, reach, 1e-11);
        }
    }
    return gram;
}

} // namespace trapsusy

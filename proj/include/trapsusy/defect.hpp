#pragma once

#include "trapsusy/oscillator.hpp"
#include "trapsusy/radial_function.hpp"
#include "trapsusy/scales.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace trapsusy {

/// Oscillator quantum defect Delta(N, L), integral shift I(L) and
/// dimension shift J.
struct DefectParams {
    std::function<double(int n, int l)> delta = [](int, int) { return 0.0; };
    std::function<int(int l)> i_shift = [](int) { return 0; };
    int dim_shift = 0;
    /// True when delta ignores N; the shifted family is then orthonormal.
    bool delta_independent_of_n = true;

    static DefectParams none() { return {}; }
    static DefectParams constant(double delta, int i_shift = 0, int dim_shift = 0);
    static DefectParams per_l(std::map<int, double> delta, int i_shift = 0, int dim_shift = 0);
    static DefectParams per_nl(std::map<std::pair<int, int>, double> delta,
                               std::map<int, double> fallback = {}, int i_shift = 0,
                               int dim_shift = 0);
};

struct ShiftedQN {
    double principal_star = 0.0;   // N* = N + I - Delta
    double angular_star = 0.0;     // L* = L + I - Delta
    int dimension_star = 3;        // D* = D + J
    int principal_s = 0;           // N_s = N + 2I
    double gamma = 0.0;            // (D - 3)/2
    double gamma_star = 0.0;       // (D* - 3)/2
    /// L* + D*/2 - 1, must exceed -1.
    double alpha_star() const { return angular_star + 0.5 * dimension_star - 1.0; }
};

ShiftedQN shifted_qn(const OscillatorQN& qn, const DefectParams& params);

/// (hbar^2/2m) [L*(L*+1) - L(L+1)]/r^2 + hbar omega0 (N - N*)
RealFunction effective_potential_3d(const PhysicalScales& scales, int principal, int angular,
                                    double principal_star, double angular_star);

/// (hbar^2/2m) [(L*+G*)(L*+G*+1) - (L+G)(L+G+1)]/r^2 + hbar omega0 (N - N* + G - G*),
/// G = (D-3)/2, G* = (D*-3)/2.
RealFunction effective_potential_d(const PhysicalScales& scales, int dimension, int dimension_star,
                                   int principal, int angular, double principal_star,
                                   double angular_star);

/// Oscillator family with real (N*, L*) in D* dimensions.
RadialFunction defect_wavefunction(const PhysicalScales& scales, int dimension_star,
                                   double principal_star, double angular_star);

/// D-dimensional reduced radial operator potential for angular momentum L:
/// U(r) + (hbar^2/2m)(L+G)(L+G+1)/r^2.
RealFunction radial_potential_d(const PhysicalScales& scales, int dimension, int angular);

/// Overlap matrix of W_{N*,L*} over the listed N at fixed L. Used to
/// report (not assert) orthogonality when Delta varies with N.
std::vector<std::vector<double>> defect_gram_matrix(const PhysicalScales& scales, int angular,
                                                    const std::vector<int>& principals,
                                                    const DefectParams& params, int dimension = 3);

} // namespace trapsusy

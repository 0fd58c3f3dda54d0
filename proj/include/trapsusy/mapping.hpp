#pragma once

#include "trapsusy/coulomb.hpp"
#include "trapsusy/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trapsusy {

/// Oscillator labels on the far side of the Coulomb-oscillator map.
struct OscillatorImage {
    int dimension = 0;
    int principal = 0;
    int angular = 0;
};

/// D = 2d - 2 - 2 lambda, N = 2n - 2 + lambda, L = 2l + lambda.
OscillatorImage map_quantum_numbers(const CoulombQN& qn, int lambda);

/// lambda = (2d - 2 - D)/2 for a requested oscillator dimension; throws
/// when no integer lambda exists (odd D, in particular D = 3 from d = 3).
int lambda_for_dimension(int coulomb_dimension, int oscillator_dimension);

/// Ratio-constancy report for W(r) / [r^(-1/2) w(z(r))].
struct MapReport {
    double ratio_mean = 0.0;           // estimate of K
    double max_relative_deviation = 0.0;
    std::size_t samples_used = 0;
    std::size_t samples_masked = 0;
    double threshold = 1e-8;
    bool pass = false;
    std::string note;
};

/// Default mapping grid in oscillator units: [1e-3, sqrt(2N+3)+6] * length, 400 points.
Grid default_map_grid(double principal, double oscillator_length = 1.0);

/// Compares W_{D,N,L}(r) with r^(-1/2) w_{d,n,l}(z), z = (n+gamma) r^2/length^2.
/// Lengths are dimensionless with the oscillator length = `oscillator_length`;
/// z is measured in half-Bohr units, the scale on which the map is exact.
MapReport verify_exact_map(const CoulombQN& qn, int lambda, const Grid& grid,
                           double oscillator_length = 1.0, double threshold = 1e-8);

/// Normalization ratio K predicted from the closed-form constants.
double predicted_map_constant(const CoulombQN& qn, int lambda, double oscillator_length = 1.0);

struct DefectMap3D {
    double principal_star = 0.0;   // 2n - 3/2
    double angular_star = 0.0;     // 2l + 1/2
    int lambda = 1;
    double constraint = 0.5;       // Delta - I = lambda - 1/2
    int dim_shift = 1;             // J landing on D* = 3 from D = 4 - 2 lambda
    OscillatorImage base;          // exact-map image before the defect shift
    std::string note;
};

/// 3D oscillator with defect <-> exact 3D Coulomb. Requires d = 3, lambda in {0,1}.
DefectMap3D defect_map_3d(const CoulombQN& qn, int lambda = 1);

struct DefectMapReport {
    MapReport ratio;
    bool stack_aligned = false;
    std::vector<double> oscillator_energies;   // E_{N*} for n = l+1, ..., l+stack
    std::vector<double> coulomb_energies;      // -1/(2n^2) for the same n
};

MapReport verify_defect_map_ratio(const CoulombQN& qn, const Grid& grid,
                                  double oscillator_length = 1.0, double threshold = 1e-8);

/// Ratio test plus stack alignment of the first `stack` states at this l.
DefectMapReport verify_defect_map_3d(const CoulombQN& qn, const Grid& grid,
                                     std::size_t stack = 5, double threshold = 1e-8);

/// Delta - I = 2(delta - i) + lambda - 1/2
double general_constraint(double delta, int i_shift, int lambda);

struct DefectTableRow {
    std::optional<int> n;   // absent for asymptotic (l, delta) rows
    int l = 0;
    double delta = 0.0;
};

struct ConsistencyRow {
    std::optional<int> n;
    int l = 0;
    double delta = 0.0;
    int i_shift = 0;
    int lambda = 0;
    double implied = 0.0;         // Delta - I
    double angular_star = 0.0;    // L* of the D*=3 image
    bool normalizable = false;
};

/// One row per (table row, lambda) with the implied oscillator Delta - I.
std::vector<ConsistencyRow> consistency_report(const std::vector<DefectTableRow>& table,
                                               const std::vector<int>& lambdas = {0, 1},
                                               int i_shift = 0);

} // namespace trapsusy

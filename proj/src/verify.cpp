#include "trapsusy/verify.hpp"

#include "trapsusy/coulomb.hpp"
#include "trapsusy/defect.hpp"
#include "trapsusy/mapping.hpp"
#include "trapsusy/numerics.hpp"
#include "trapsusy/oracle.hpp"
#include "trapsusy/oscillator.hpp"
#include "trapsusy/susy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace trapsusy {

namespace {

class Recorder {
public:
    Recorder(std::string suite, const VerifyOptions& options)
        : suite_(std::move(suite)), options_(options) {}

    void add(std::string name, double value, double threshold) {
        Check c{suite_, std::move(name), value, options_.tolerance.value_or(threshold), false, false};
        evaluate(c);
        checks_.push_back(std::move(c));
    }
    void exact(std::string name, double value) {
        Check c{suite_, std::move(name), value, 0.0, true, false};
        evaluate(c);
        checks_.push_back(std::move(c));
    }
    std::vector<Check> take() { return std::move(checks_); }

private:
    std::string suite_;
    const VerifyOptions& options_;
    std::vector<Check> checks_;
};

double overlap_integral(const RadialFunction& a, const RadialFunction& b, double reach) {
    return integrate([&](double r) { return a(r) * b(r); }, 0.0, reach, 1e-11);
}

std::string tag(const char* key, int v) { return std::string(key) + "=" + std::to_string(v); }

void numerics_suite(Recorder& rec) {
    // Quadrature on x^k, k <= 10.
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double value = integrate([k](double x) { return std::pow(x, k); }, 0.0, 1.0, 1e-12);
        worst = std::max(worst, std::abs(value - 1.0 / (k + 1)));
    }
    rec.add("quadrature exact on degree<=10 polynomials", worst, 1e-10);

    // Dirichlet Laplacian spectrum 2 - 2cos(j pi/(n+1)).
    const std::size_t n = 50;
    const std::vector<double> diag(n, 2.0), off(n - 1, -1.0);
    const TridiagEigen eig = tridiag_eigen(diag, off, n, false);
    worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double exact = 2.0 - 2.0 * std::cos((j + 1.0) * M_PI / (n + 1.0));
        worst = std::max(worst, std::abs(eig.values[j] - exact) / exact);
    }
    rec.add("tridiagonal eigenvalues vs Dirichlet Laplacian (relative)", worst, 1e-10);

    // Laguerre orthogonality under z^alpha e^-z.
    worst = 0.0;
    for (double alpha : {0.0, 0.5, 1.0, 3.0}) {
        for (int a = 0; a <= 10; ++a) {
            for (int b = a + 1; b <= 10; ++b) {
                const double v = integrate(
                    [=](double z) {
                        return laguerre(a, alpha, z) * laguerre(b, alpha, z) * std::pow(z, alpha) *
                               std::exp(-z);
                    },
                    0.0, 150.0, 1e-11);
                const double scale = std::exp(0.5 * (log_gamma(a + alpha + 1) - log_gamma(a + 1.0) +
                                                     log_gamma(b + alpha + 1) - log_gamma(b + 1.0)));
                worst = std::max(worst, std::abs(v) / scale);
            }
        }
    }
    rec.add("Laguerre orthogonality (m != n <= 10)", worst, 1e-8);
}

void spectrum_suite(Recorder& rec, const VerifyOptions& opt) {
    const PhysicalScales& s = opt.scales;
    const double hw = s.hbar_omega();
    const Grid grid = default_oracle_grid(s, opt.oracle_points);

    for (int l = 0; l <= 2; ++l) {
        const Potential1D bare{[trap = trap_potential(s), c = s.kinetic() * l * (l + 1)](double r) {
                                   return trap(r) + c / (r * r);
                               },
                               0.0};
        const SpectrumReport rep = solve_radial(bare, s, grid, 4);
        double err = 0.0, ovl = 0.0;
        for (int k = 0; k < 4; ++k) {
            const int n = l + 2 * k;
            err = std::max(err, std::abs(rep.corrected[k] - oscillator_energy(s, 3, n)) / hw);
            ovl = std::max(ovl, 1.0 - overlap_with(rep, k, oscillator_wavefunction(s, OscillatorQN(3, n, l))));
        }
        rec.add("oracle vs E_N, 4 lowest states, " + tag("L", l), err, 1e-5);
        rec.add("1 - |<psi_oracle, W_NL>|, " + tag("L", l), ovl, 1e-6);
    }

    // Second-order convergence of the raw three-point eigenvalues.
    const Potential1D trap{trap_potential(s), 0.0};
    const double b = s.oscillator_length();
    const double e0 = oscillator_energy(s, 3, 0);
    const double coarse =
        solve_radial(trap, s, Grid(1e-8 * b, 12 * b, 2001), 1).eigenvalues[0] - e0;
    const double fine = solve_radial(trap, s, Grid(1e-8 * b, 12 * b, 4001), 1).eigenvalues[0] - e0;
    rec.add("grid halving error ratio, |ratio - 4|", std::abs(coarse / fine - 4.0), 0.2);
}

void core_suite(Recorder& rec) {
    const std::map<int, std::vector<std::uint64_t>> printed = {{0, {4, 20, 56, 120, 220}},
                                                               {1, {1, 10, 35, 84}}};
    for (const auto& [l, counts] : printed) {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const int s = static_cast<int>(i) + 1;
            const std::uint64_t got = core_count(l, s).count;
            rec.exact("core_count " + tag("L", l) + " " + tag("s", s),
                      std::abs(static_cast<double>(got) - static_cast<double>(counts[i])));
        }
    }
    double mismatch = 0.0;
    for (int l = 0; l <= 6; ++l)
        for (int s = 1; s <= 10; ++s)
            if (2 * s - l >= 1)
                mismatch += std::abs(static_cast<double>(core_count(l, s).count) -
                                     static_cast<double>(core_count_enumerated(l, s)));
    rec.exact("closed form vs state enumeration, L<=6, s<=10", mismatch);
}

void susy_suite(Recorder& rec, const VerifyOptions& opt) {
    const PhysicalScales& s = opt.scales;
    const double hw = s.hbar_omega();
    const double b = s.oscillator_length();
    const Grid grid = default_oracle_grid(s, opt.oracle_points);

    for (int l = 0; l <= 2; ++l) {
        const Potential1D v1 = bosonic_potential(s, l);
        const RadialFunction ground = oscillator_wavefunction(s, OscillatorQN(3, l, l));
        const Potential1D v2 = partner_potential(v1, ground, s);
        const SpectrumReport bos = solve_radial(v1, s, grid, 6);
        const SpectrumReport par = solve_radial(v2, s, grid, 5);

        rec.add("bosonic lowest level at zero, " + tag("L", l), std::abs(bos.corrected[0]) / hw, 1e-6);
        double deg = 0.0;
        for (int k = 0; k < 5; ++k)
            deg = std::max(deg, std::abs(par.corrected[k] - bos.corrected[k + 1]) / hw);
        rec.add("partner spectrum = bosonic minus zero level (5 levels), " + tag("L", l), deg, 1e-6);

        // V2 - bosonic(L+1) is a constant.
        const Potential1D next = bosonic_potential(s, l + 1);
        std::vector<double> diff;
        for (double r : sample_radii(s, l)) diff.push_back(v2(r) - next(r));
        double mean = 0.0;
        for (double d : diff) mean += d;
        mean /= static_cast<double>(diff.size());
        double var = 0.0;
        for (double d : diff) var += (d - mean) * (d - mean);
        var /= static_cast<double>(diff.size());
        rec.add("variance of V2 - V_bos(L+1), " + tag("L", l), var, 1e-10);

        // Annihilation and intertwining on a sampling grid.
        const Grid probe(1e-2 * b, oscillator_cutoff(s, l + 8), 600);
        const RealFunction a_ground = lowering_operator(ground, s, ground.evaluator());
        double worst = 0.0, peak = 0.0;
        for (double r : probe.nodes()) {
            worst = std::max(worst, std::abs(a_ground(r)));
            peak = std::max(peak, std::abs(ground(r)));
        }
        rec.add("A annihilates bosonic ground state, " + tag("L", l), worst / peak, 1e-8);

        double cos_gap = 0.0;
        for (int k = 1; k <= 4; ++k) {
            const int n = l + 2 * k;
            const RadialFunction psi = oscillator_wavefunction(s, OscillatorQN(3, n, l));
            const RealFunction a_psi = lowering_operator(ground, s, psi.evaluator());
            const RadialFunction fermion = fermionic_wavefunction(s, l, n);
            double dot = 0.0, aa = 0.0, ff = 0.0;
            for (double r : probe.nodes()) {
                const double x = a_psi(r), y = fermion(r);
                dot += x * y;
                aa += x * x;
                ff += y * y;
            }
            cos_gap = std::max(cos_gap, 1.0 - std::abs(dot) / std::sqrt(aa * ff));
        }
        rec.add("A psi_N parallel to fermionic state, " + tag("L", l), cos_gap, 1e-8);

        // Fermionic family.
        const RadialFunction lowest = fermionic_wavefunction(s, l, l + 2);
        const Grid node_grid(1e-4 * b, oscillator_cutoff(s, l + 1), 4000);
        rec.exact("fermionic lowest state W_{L+1,L+1} nodes, " + tag("L", l),
                  count_nodes(lowest, node_grid).nodes);
        double ortho = 0.0;
        for (int a = 0; a < 5; ++a) {
            for (int c = a; c < 5; ++c) {
                const RadialFunction fa = fermionic_wavefunction(s, l, l + 2 + 2 * a);
                const RadialFunction fc = fermionic_wavefunction(s, l, l + 2 + 2 * c);
                const double v = overlap_integral(fa, fc, oscillator_cutoff(s, l + 1 + 2 * c));
                ortho = std::max(ortho, std::abs(v - (a == c ? 1.0 : 0.0)));
            }
        }
        rec.add("fermionic family orthonormal, " + tag("L", l), ortho, 1e-8);
    }

    // Three shell-filling iterations at L = 0.
    const SectorSpec sector = iterate_sector(s, 0, 3);
    const SpectrumReport iter = solve_radial(sector.potential, s, grid, 3);
    const SpectrumReport bos = solve_radial(bosonic_potential(s, 0), s, grid, 6);
    double gap = 0.0;
    for (int k = 0; k < 3; ++k)
        gap = std::max(gap, std::abs(iter.corrected[k] + sector.energy_offset - bos.corrected[k + 3]) / hw);
    rec.add("3x iterated sector = bosonic L=0 minus 3 lowest levels", gap, 1e-6);
    rec.exact("3x iterated sector valence floor N=6", std::abs(sector.valence_min_n - 6));
}

void defect_suite(Recorder& rec, const VerifyOptions& opt) {
    const PhysicalScales& s = opt.scales;

    double worst = 0.0;
    for (double delta : {0.0, 0.25, 0.5}) {
        for (int shift : {0, 1}) {
            const DefectParams params = DefectParams::constant(delta, shift);
            for (int l = 0; l <= 2; ++l) {
                for (int n = l; n <= l + 4; n += 2) {
                    const ShiftedQN q = shifted_qn(OscillatorQN(3, n, l), params);
                    const RadialFunction w =
                        defect_wavefunction(s, 3, q.principal_star, q.angular_star);
                    const RealFunction h_l = radial_potential_d(s, 3, l);
                    const RealFunction v_eff =
                        effective_potential_3d(s, n, l, q.principal_star, q.angular_star);
                    // Schroedinger operator of the undisturbed level, (H_L - E_N), plus V_eff.
                    const Potential1D op{[=](double r) { return h_l(r) + v_eff(r); }, 0.0};
                    worst = std::max(worst, residual_at(op, w, oscillator_energy(s, 3, n),
                                                        sample_radii(s, q.principal_star), s));
                }
            }
        }
    }
    rec.add("(H_L - E_N + V_eff) W_{N*,L*} residual, Delta in {0,.25,.5}, I in {0,1}", worst, 1e-5);

    // Energies flow through E_{N*}: H_{L*} W_{N*,L*} = E_{N*} W_{N*,L*}.
    worst = 0.0;
    for (double delta : {0.25, 0.5}) {
        const ShiftedQN q = shifted_qn(OscillatorQN(3, 2, 0), DefectParams::constant(delta));
        const RadialFunction w = defect_wavefunction(s, 3, q.principal_star, q.angular_star);
        const Potential1D op{[=, trap = trap_potential(s)](double r) {
                                 return trap(r) + s.kinetic() * q.angular_star * (q.angular_star + 1) / (r * r);
                             },
                             0.0};
        worst = std::max(worst, residual_at(op, w, oscillator_energy(s, 3, q.principal_star),
                                            sample_radii(s, q.principal_star), s));
    }
    rec.add("W_{N*,L*} carries E_{N*}", worst, 1e-5);

    // Switch-off recovery.
    double off_bos = 0.0, off_ferm = 0.0;
    const std::vector<double> radii = sample_radii(s, 8.0);
    for (int l = 0; l <= 2; ++l) {
        for (int n = l; n <= l + 4; n += 2) {
            const ShiftedQN q0 = shifted_qn(OscillatorQN(3, n, l), DefectParams::none());
            const ShiftedQN q1 = shifted_qn(OscillatorQN(3, n, l), DefectParams::constant(0.0, 1));
            const RadialFunction w0 = defect_wavefunction(s, 3, q0.principal_star, q0.angular_star);
            const RadialFunction w1 = defect_wavefunction(s, 3, q1.principal_star, q1.angular_star);
            const RadialFunction bos = oscillator_wavefunction(s, OscillatorQN(3, n, l));
            const RadialFunction fer = fermionic_wavefunction(s, l, n + 2);
            for (double r : radii) {
                off_bos = std::max(off_bos, std::abs(w0(r) - bos(r)));
                off_ferm = std::max(off_ferm, std::abs(w1(r) - fer(r)));
            }
        }
    }
    rec.add("switch-off (Delta,I)=(0,0) reproduces bosonic W_{N,L}", off_bos, 1e-12);
    rec.add("switch-off (Delta,I)=(0,1) reproduces fermionic W_{N_s-1,L+1}", off_ferm, 1e-12);

    // Orthonormality of a constant-Delta family.
    double ortho = 0.0;
    for (double delta : {0.25, 0.5}) {
        const auto gram = defect_gram_matrix(s, 1, {1, 3, 5, 7}, DefectParams::constant(delta));
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j)
                ortho = std::max(ortho, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
    }
    rec.add("constant-Delta family orthonormal", ortho, 1e-8);

    // D = 5 problem moved to D* = 3 with J = -2.
    worst = 0.0;
    for (int l = 0; l <= 2; ++l) {
        for (int n = l; n <= l + 4; n += 2) {
            DefectParams params = DefectParams::none();
            params.dim_shift = -2;
            const ShiftedQN q = shifted_qn(OscillatorQN(5, n, l), params);
            const RadialFunction w = defect_wavefunction(s, q.dimension_star, q.principal_star, q.angular_star);
            const RealFunction h = radial_potential_d(s, 5, l);
            const RealFunction v_eff =
                effective_potential_d(s, 5, q.dimension_star, n, l, q.principal_star, q.angular_star);
            const Potential1D op{[=](double r) { return h(r) + v_eff(r); }, 0.0};
            const double energy = oscillator_energy(s, 5, n);
            worst = std::max(worst, residual_at(op, w, energy, sample_radii(s, n), s) / std::abs(energy));
        }
    }
    rec.add("D=5 -> D*=3 operator reproduces the D=5 energy (relative)", worst, 1e-5);
}

struct ExactFixture {
    int d, n, l, lambda;
};

void map_exact_suite(Recorder& rec) {
    const std::vector<ExactFixture> fixtures = {{3, 1, 0, 0}, {3, 1, 0, 1}, {3, 2, 0, 0}, {3, 2, 0, 1},
                                                {3, 2, 1, 0}, {3, 2, 1, 1}, {5, 1, 0, 0}};
    for (const auto& f : fixtures) {
        const CoulombQN qn(f.d, f.n, f.l);
        const OscillatorImage image = map_quantum_numbers(qn, f.lambda);
        const MapReport rep = verify_exact_map(qn, f.lambda, default_map_grid(image.principal));
        const std::string label = "(d,n,l,lambda)=(" + std::to_string(f.d) + "," + std::to_string(f.n) +
                                  "," + std::to_string(f.l) + "," + std::to_string(f.lambda) + ")";
        rec.add("ratio spread " + label, rep.max_relative_deviation, 1e-8);
        const double k_pred = predicted_map_constant(qn, f.lambda);
        rec.add("K matches normalization ratio " + label, std::abs(rep.ratio_mean - k_pred) / k_pred, 1e-8);
    }
    rec.exact("d=3, lambda=0 -> D=4", std::abs(map_quantum_numbers(CoulombQN(3, 1, 0), 0).dimension - 4));
    rec.exact("d=3, lambda=1 -> D=2", std::abs(map_quantum_numbers(CoulombQN(3, 1, 0), 1).dimension - 2));
    bool rejected = false;
    try {
        lambda_for_dimension(3, 3);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    rec.exact("D=3 <-> d=3 request rejected", rejected ? 0.0 : 1.0);
}

void map_defect_suite(Recorder& rec) {
    const std::vector<std::pair<int, int>> fixtures = {{1, 0}, {2, 0}, {2, 1}, {3, 1}};
    for (const auto& [n, l] : fixtures) {
        const CoulombQN qn(3, n, l);
        const DefectMap3D map = defect_map_3d(qn);
        const DefectMapReport rep = verify_defect_map_3d(qn, default_map_grid(map.principal_star));
        const std::string label = "(n,l)=(" + std::to_string(n) + "," + std::to_string(l) + ")";
        rec.add("ratio spread " + label, rep.ratio.max_relative_deviation, 1e-8);
        rec.exact("N* = 2n - 3/2 " + label, std::abs(map.principal_star - (2.0 * n - 1.5)));
        rec.exact("L* = 2l + 1/2 " + label, std::abs(map.angular_star - (2.0 * l + 0.5)));
        rec.exact("Delta - I = lambda - 1/2 " + label, std::abs(map.constraint - 0.5));
    }
    const DefectMapReport stack = verify_defect_map_3d(CoulombQN(3, 1, 0), default_map_grid(0.5), 5);
    rec.exact("stack alignment n=1..5", stack.stack_aligned ? 0.0 : 1.0);
}

} // namespace

bool evaluate(Check& check) {
    check.pass = std::isfinite(check.value) && check.value <= check.threshold;
    return check.pass;
}

std::vector<std::string> suite_names() {
    return {"numerics", "spectrum", "core", "susy", "defect", "map-exact", "map-defect"};
}

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options) {
    if (suite == "all") {
        std::vector<Check> all;
        for (const auto& name : suite_names()) {
            auto part = run_suite(name, options);
            all.insert(all.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return all;
    }
    Recorder rec(suite, options);
    if (suite == "numerics")
        numerics_suite(rec);
    else if (suite == "spectrum")
        spectrum_suite(rec, options);
    else if (suite == "core")
        core_suite(rec);
    else if (suite == "susy")
        susy_suite(rec, options);
    else if (suite == "defect")
        defect_suite(rec, options);
    else if (suite == "map-exact")
        map_exact_suite(rec);
    else if (suite == "map-defect")
        map_defect_suite(rec);
    else
        throw std::invalid_argument("unknown verification suite: " + suite);
    return rec.take();
}

} // namespace trapsusy

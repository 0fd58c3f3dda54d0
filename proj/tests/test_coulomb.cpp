#include <doctest.h>

#include "trapsusy/coulomb.hpp"

#include <cmath>

using namespace trapsusy;

TEST_CASE("coulomb: validation") {
    CHECK_THROWS_AS(CoulombQN(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(CoulombQN(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(CoulombQN(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(CoulombQN(3, 2, -1), std::invalid_argument);
    CHECK(CoulombQN(5, 1, 0).gamma() == doctest::Approx(1.0));
}

TEST_CASE("coulomb: hydrogen 1s, 2s, 2p in closed form") {
    const RadialFunction w10 = coulomb_wavefunction(CoulombQN(3, 1, 0));
    const RadialFunction w20 = coulomb_wavefunction(CoulombQN(3, 2, 0));
    const RadialFunction w21 = coulomb_wavefunction(CoulombQN(3, 2, 1));
    for (double r : {0.01, 0.4, 1.0, 3.0, 7.5}) {
        CHECK(w10(r) == doctest::Approx(2.0 * r * std::exp(-r)).epsilon(1e-12));
        CHECK(w20(r) == doctest::Approx(r * (1.0 - 0.5 * r) * std::exp(-0.5 * r) / std::sqrt(2.0)).epsilon(1e-12));
        CHECK(w21(r) == doctest::Approx(r * r * std::exp(-0.5 * r) / std::sqrt(24.0)).epsilon(1e-12));
    }
}

TEST_CASE("coulomb: Bohr radius rescales as a^(-1/2) w(r/a)") {
    const CoulombQN qn(3, 3, 1);
    const RadialFunction w1 = coulomb_wavefunction(qn);
    const RadialFunction w2 = coulomb_wavefunction(qn, 2.0);
    for (double r : {0.3, 2.0, 9.0}) CHECK(w2(r) == doctest::Approx(w1(r / 2.0) / std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(coulomb_wavefunction(qn, 0.0), std::invalid_argument);
}

TEST_CASE("coulomb: orthonormal at fixed l in d = 3 and d = 5") {
    for (int d : {3, 5}) {
        for (int l = 0; l <= 2; ++l) {
            for (int n1 = l + 1; n1 <= l + 4; ++n1) {
                const CoulombQN q1(d, n1, l);
                const RadialFunction a = coulomb_wavefunction(q1);
                for (int n2 = l + 1; n2 <= n1; ++n2) {
                    const RadialFunction b = coulomb_wavefunction(CoulombQN(d, n2, l));
                    const double ov =
                        integrate([&](double r) { return a(r) * b(r); }, 0.0, coulomb_cutoff(q1));
                    CHECK(std::abs(ov - (n1 == n2 ? 1.0 : 0.0)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("coulomb: radial equation with the d-dimensional centrifugal term") {
    for (int d : {3, 4, 5}) {
        for (int n = 1; n <= 4; ++n) {
            for (int l = 0; l < n; ++l) {
                const CoulombQN qn(d, n, l);
                const RadialFunction w = coulomb_wavefunction(qn);
                const double g = qn.gamma();
                const double e = coulomb_energy(qn);
                CHECK(e == doctest::Approx(-0.5 / ((n + g) * (n + g))));
                double worst = 0.0, peak = 0.0;
                for (double r = 0.5; r < 4.0 * (n + g) * (n + g); r += 0.37) {
                    const double d2 = second_derivative5(w.evaluator(), r, 1e-3);
                    const double v = 0.5 * (l + g) * (l + g + 1) / (r * r) - 1.0 / r;
                    worst = std::max(worst, std::abs(-0.5 * d2 + (v - e) * w(r)));
                    peak = std::max(peak, std::abs(w(r)));
                }
                CHECK(worst / peak < 1e-8);
            }
        }
    }
}

TEST_CASE("rydberg: E0 / (n - delta)^2 and presets") {
    const CoulombDefect none = CoulombDefect::none();
    CHECK(rydberg_energy(none, 2, 0) == doctest::Approx(-0.125));
    const CoulombDefect flat = CoulombDefect::constant(0.25, -1.0);
    CHECK(rydberg_energy(flat, 3, 1) == doctest::Approx(-1.0 / (2.75 * 2.75)));

    const CoulombDefect by_l = CoulombDefect::per_l({{0, 1.35}, {1, 0.86}});
    CHECK(by_l.effective_n(4, 0) == doctest::Approx(2.65));
    CHECK(by_l.effective_n(4, 1) == doctest::Approx(3.14));
    CHECK(by_l.effective_n(4, 2) == doctest::Approx(4.0));

    const CoulombDefect by_nl = CoulombDefect::per_nl({{{3, 0}, 1.37}}, {{0, 1.35}});
    CHECK(by_nl.delta(3, 0) == doctest::Approx(1.37));
    CHECK(by_nl.delta(5, 0) == doctest::Approx(1.35));
    CHECK(by_nl.delta(5, 1) == doctest::Approx(0.0));

    CHECK_THROWS_AS(rydberg_energy(CoulombDefect::constant(1.0), 1, 0), std::invalid_argument);
}

#include <doctest.h>

#include "trapsusy/defect.hpp"
#include "trapsusy/mapping.hpp"
#include "trapsusy/oscillator.hpp"

#include <cmath>
#include <string>

using namespace trapsusy;

TEST_CASE("map quantum numbers: D = 2d - 2 - 2 lambda, N = 2n - 2 + lambda, L = 2l + lambda") {
    const OscillatorImage a = map_quantum_numbers(CoulombQN(3, 2, 1), 0);
    CHECK(a.dimension == 4);
    CHECK(a.principal == 2);
    CHECK(a.angular == 2);
    const OscillatorImage b = map_quantum_numbers(CoulombQN(3, 2, 1), 1);
    CHECK(b.dimension == 2);
    CHECK(b.principal == 3);
    CHECK(b.angular == 3);
    CHECK(map_quantum_numbers(CoulombQN(5, 1, 0), 0).dimension == 8);
}

TEST_CASE("property: every image dimension is even, so odd D has no partner") {
    for (int d = 2; d <= 9; ++d)
        for (int lambda = 0; 2 * d - 2 - 2 * lambda >= 1; ++lambda) {
            const OscillatorImage img = map_quantum_numbers(CoulombQN(d, 2, 1), lambda);
            CHECK(img.dimension % 2 == 0);
            CHECK(lambda_for_dimension(d, img.dimension) == lambda);
        }
    CHECK(lambda_for_dimension(3, 4) == 0);
    CHECK(lambda_for_dimension(3, 2) == 1);
    try {
        lambda_for_dimension(3, 3);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("no such correspondence") != std::string::npos);
    }
}

TEST_CASE("exact map, ground state: W_{4,0,0} is proportional to r^(-1/2) * r^2 e^{-r^2/2}") {
    const RadialFunction w = oscillator_wavefunction(PhysicalScales::dimensionless(), OscillatorQN(4, 0, 0));
    const double k = w(1.0) / std::exp(-0.5);
    for (double r : {0.1, 0.7, 1.6, 3.0}) CHECK(w(r) == doctest::Approx(k * std::pow(r, 1.5) * std::exp(-0.5 * r * r)));
}

TEST_CASE("exact map: ratio constant over a fixture list") {
    for (int d : {3, 4, 5})
        for (int n = 1; n <= 3; ++n)
            for (int l = 0; l < n; ++l)
                for (int lambda : {0, 1}) {
                    const CoulombQN qn(d, n, l);
                    const OscillatorImage img = map_quantum_numbers(qn, lambda);
                    const MapReport rep = verify_exact_map(qn, lambda, default_map_grid(img.principal));
                    CHECK(rep.pass);
                    CHECK(rep.max_relative_deviation < 1e-8);
                    CHECK(rep.ratio_mean == doctest::Approx(predicted_map_constant(qn, lambda)).epsilon(1e-8));
                }
}

TEST_CASE("property: ratio constancy is invariant under the length unit") {
    const CoulombQN qn(3, 3, 1);
    const OscillatorImage img = map_quantum_numbers(qn, 1);
    for (double c : {0.3, 1.0, 2.7}) {
        const MapReport rep = verify_exact_map(qn, 1, default_map_grid(img.principal, c), c);
        CHECK(rep.pass);
        CHECK(rep.ratio_mean == doctest::Approx(predicted_map_constant(qn, 1, c)).epsilon(1e-8));
    }
}

TEST_CASE("exact map: nodes are masked rather than divided through") {
    const CoulombQN qn(3, 3, 0);
    const MapReport rep = verify_exact_map(qn, 0, default_map_grid(4));
    CHECK(rep.samples_masked > 0);
    CHECK(rep.pass);
}

TEST_CASE("defect map: shifted labels and constraint") {
    for (int lambda : {0, 1}) {
        const DefectMap3D m = defect_map_3d(CoulombQN(3, 2, 1), lambda);
        CHECK(m.principal_star == doctest::Approx(2.5));
        CHECK(m.angular_star == doctest::Approx(2.5));
        CHECK(m.constraint == doctest::Approx(lambda - 0.5));
        CHECK(m.base.dimension + m.dim_shift == 3);
    }
    CHECK_THROWS_AS(defect_map_3d(CoulombQN(4, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(defect_map_3d(CoulombQN(3, 1, 0), 2), std::invalid_argument);
}

TEST_CASE("defect map: ratio and stack alignment") {
    for (int n = 1; n <= 3; ++n)
        for (int l = 0; l < n; ++l) {
            const DefectMap3D m = defect_map_3d(CoulombQN(3, n, l));
            const DefectMapReport rep = verify_defect_map_3d(CoulombQN(3, n, l), default_map_grid(m.principal_star));
            CHECK(rep.ratio.pass);
            CHECK(rep.stack_aligned);
            // Equal steps in N* map to equal steps in the oscillator energy.
            for (std::size_t k = 1; k < rep.oscillator_energies.size(); ++k)
                CHECK(rep.oscillator_energies[k] - rep.oscillator_energies[k - 1] ==
                      doctest::Approx(rep.oscillator_energies[1] - rep.oscillator_energies[0]));
        }
}

TEST_CASE("general constraint") {
    CHECK(general_constraint(0.349, 0, 0) == doctest::Approx(0.198).epsilon(1e-12));
    CHECK(general_constraint(0.5, 0, 1) == doctest::Approx(1.5));
    CHECK(general_constraint(1.5, 1, 1) == doctest::Approx(1.5));
}

TEST_CASE("consistency report") {
    const std::vector<DefectTableRow> table = {{std::nullopt, 0, 0.5}, {3, 1, 0.86}};
    const auto rows = consistency_report(table);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].lambda == 0);
    CHECK(rows[1].lambda == 1);
    CHECK(rows[1].implied == doctest::Approx(1.5));
    CHECK(rows[3].n == 3);
    CHECK(rows[3].implied == doctest::Approx(2 * 0.86 + 0.5));
    for (const auto& r : rows) CHECK(r.normalizable == (r.angular_star + 0.5 > -1.0));
    CHECK(consistency_report({}).empty());

    const auto deep = consistency_report({{std::nullopt, 0, 1.2}}, {1});
    CHECK(deep[0].angular_star == doctest::Approx(-1.9));
    CHECK(!deep[0].normalizable);
}

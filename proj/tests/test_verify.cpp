#include <doctest.h>

#include "trapsusy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

using namespace trapsusy;

TEST_CASE("verify: every suite passes at default thresholds") {
    for (const std::string& name : suite_names()) {
        CAPTURE(name);
        for (const Check& c : run_suite(name)) {
            CAPTURE(c.name);
            CHECK(c.pass);
            CHECK(c.suite == name);
        }
    }
}

TEST_CASE("verify: tolerance override leaves exact checks alone") {
    VerifyOptions opt;
    opt.tolerance = 1e-30;
    const auto checks = run_suite("map-exact", opt);
    REQUIRE(!checks.empty());
    for (const Check& c : checks) {
        if (c.exact) {
            CHECK(c.threshold == 0.0);
            CHECK(c.pass);
        } else {
            CHECK(c.threshold == 1e-30);
        }
    }
}

TEST_CASE("verify: a tolerance below the discretization floor fails honestly") {
    VerifyOptions opt;
    opt.tolerance = 1e-12;
    const auto checks = run_suite("spectrum", opt);
    CHECK(std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

TEST_CASE("verify: evaluate") {
    Check c{"s", "n", 1e-9, 1e-8, false, false};
    CHECK(evaluate(c));
    c.value = 2e-8;
    CHECK(!evaluate(c));
    c.value = std::numeric_limits<double>::quiet_NaN();
    CHECK(!evaluate(c));
}

TEST_CASE("verify: unknown suite") {
    CHECK_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
}

#pragma once

#include "trapsusy/scales.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trapsusy {

/// One numeric verification: passes when value <= threshold. Values are
/// deviations (errors, spreads, 1 - overlap) so every check reads the same way.
struct Check {
    std::string suite;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    /// Exact checks (integer counts, parity rules) ignore tolerance overrides.
    bool exact = false;
    bool pass = false;
};

struct VerifyOptions {
    PhysicalScales scales = PhysicalScales::dimensionless();
    std::size_t oracle_points = 4000;
    /// Replaces the threshold of every non-exact check.
    std::optional<double> tolerance;
};

/// Suites: "numerics", "spectrum", "core", "susy", "defect", "map-exact",
/// "map-defect", or "all".
std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options = {});
std::vector<std::string> suite_names();

/// Recomputes pass flags from value/threshold (used when replaying a
/// recorded report).
bool evaluate(Check& check);

} // namespace trapsusy

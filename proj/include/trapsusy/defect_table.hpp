#pragma once

#include "trapsusy/coulomb.hpp"
#include "trapsusy/defect.hpp"
#include "trapsusy/mapping.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace trapsusy {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Plain-text defect table:
///
///     # comment
///     n l delta        (or: l delta)
///     3 0 1.35
///
/// Whitespace-separated columns; the header fixes the layout. A file with
/// only comments and blank lines is an empty table.
std::vector<DefectTableRow> parse_defect_table(std::istream& in);
std::vector<DefectTableRow> load_defect_table(const std::string& path);

CoulombDefect coulomb_defect_from_table(const std::vector<DefectTableRow>& rows,
                                        double ground_energy = -0.5);
DefectParams defect_params_from_table(const std::vector<DefectTableRow>& rows, int i_shift = 0,
                                      int dim_shift = 0);

} // namespace trapsusy

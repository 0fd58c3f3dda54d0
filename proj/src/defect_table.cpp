#include "trapsusy/defect_table.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace trapsusy {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

int parse_int(const std::string& s, std::size_t line, const char* column) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size())
        throw ParseError(line, std::string("column '") + column + "' is not an integer: " + s);
    return value;
}

double parse_real(const std::string& s, std::size_t line, const char* column) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || !std::isfinite(value))
        throw ParseError(line, std::string("column '") + column + "' is not a real number: " + s);
    return value;
}

} // namespace

std::vector<DefectTableRow> parse_defect_table(std::istream& in) {
    std::vector<DefectTableRow> rows;
    std::string raw;
    std::size_t line_no = 0;
    bool with_n = false, have_header = false;

    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto tokens = split(raw);
        if (tokens.empty()) continue;

        if (!have_header) {
            if (tokens == std::vector<std::string>{"l", "delta"}) {
                with_n = false;
            } else if (tokens == std::vector<std::string>{"n", "l", "delta"}) {
                with_n = true;
            } else {
                throw ParseError(line_no, "expected header 'l delta' or 'n l delta'");
            }
            have_header = true;
            continue;
        }

        const std::size_t expected = with_n ? 3 : 2;
        if (tokens.size() != expected)
            throw ParseError(line_no, "expected " + std::to_string(expected) + " columns, found " +
                                          std::to_string(tokens.size()));
        DefectTableRow row;
        std::size_t col = 0;
        if (with_n) row.n = parse_int(tokens[col++], line_no, "n");
        row.l = parse_int(tokens[col++], line_no, "l");
        row.delta = parse_real(tokens[col], line_no, "delta");
        if (row.l < 0) throw ParseError(line_no, "l must be >= 0");
        if (row.n && *row.n <= row.l) throw ParseError(line_no, "need n > l");
        rows.push_back(row);
    }
    return rows;
}

std::vector<DefectTableRow> load_defect_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_defect_table(in);
}

CoulombDefect coulomb_defect_from_table(const std::vector<DefectTableRow>& rows, double ground_energy) {
    std::map<std::pair<int, int>, double> by_nl;
    std::map<int, double> by_l;
    for (const auto& row : rows) {
        if (row.n)
            by_nl[{*row.n, row.l}] = row.delta;
        else
            by_l[row.l] = row.delta;
    }
    if (by_nl.empty()) return CoulombDefect::per_l(std::move(by_l), ground_energy);
    return CoulombDefect::per_nl(std::move(by_nl), std::move(by_l), ground_energy);
}

DefectParams defect_params_from_table(const std::vector<DefectTableRow>& rows, int i_shift,
                                      int dim_shift) {
    std::map<std::pair<int, int>, double> by_nl;
    std::map<int, double> by_l;
    for (const auto& row : rows) {
        if (row.n)
            by_nl[{*row.n, row.l}] = row.delta;
        else
            by_l[row.l] = row.delta;
    }
    if (by_nl.empty()) return DefectParams::per_l(std::move(by_l), i_shift, dim_shift);
    return DefectParams::per_nl(std::move(by_nl), std::move(by_l), i_shift, dim_shift);
}

} // namespace trapsusy

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace trapsusy::cli {

enum class Format { csv, json, pretty };

Format parse_format(const std::string& name);

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Column-oriented output with a small key/value header.
struct Table {
    std::vector<std::pair<std::string, Cell>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// CSV: `# key=value` lines, a header row, then data. Reals use
/// fixed 15-significant-digit scientific notation so reruns are
/// byte-identical.
void write_table(std::ostream& out, const Table& table, Format format);

std::string format_real(double value);

} // namespace trapsusy::cli

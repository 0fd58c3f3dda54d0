#include "table.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace trapsusy::cli {

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "pretty") return Format::pretty;
    throw std::invalid_argument("unknown output format '" + name + "' (csv, json, pretty)");
}

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", value);
    return buf;
}

namespace {

std::string to_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                return format_real(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::string>)
                return v;
            else
                return std::to_string(v);
        },
        cell);
}

nlohmann::json to_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return v;
            } else {
                return v;
            }
        },
        cell);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

void write_table(std::ostream& out, const Table& table, Format format) {
    switch (format) {
    case Format::csv: {
        for (const auto& [key, value] : table.meta) out << "# " << key << "=" << to_text(value) << "\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << csv_escape(table.columns[i]);
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(to_text(row[i]));
            out << "\n";
        }
        break;
    }
    case Format::json: {
        nlohmann::ordered_json doc;
        nlohmann::ordered_json meta = nlohmann::ordered_json::object();
        for (const auto& [key, value] : table.meta) meta[key] = to_json(value);
        doc["meta"] = meta;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
                obj[table.columns[i]] = to_json(row[i]);
            rows.push_back(obj);
        }
        doc["rows"] = rows;
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::pretty: {
        for (const auto& [key, value] : table.meta) out << key << ": " << to_text(value) << "\n";
        if (!table.meta.empty()) out << "\n";
        std::vector<std::vector<std::string>> text;
        std::vector<std::size_t> width(table.columns.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
        for (const auto& row : table.rows) {
            std::vector<std::string> line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::string t = std::holds_alternative<double>(row[i]) ? [&] {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.10g", std::get<double>(row[i]));
                    return std::string(buf);
                }()
                                                                        : to_text(row[i]);
                if (i < width.size()) width[i] = std::max(width[i], t.size());
                line.push_back(std::move(t));
            }
            text.push_back(std::move(line));
        }
        auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                out << (i ? "  " : "") << cells[i];
                if (i + 1 < cells.size() && i < width.size())
                    out << std::string(width[i] - cells[i].size(), ' ');
            }
            out << "\n";
        };
        emit(table.columns);
        for (const auto& line : text) emit(line);
        break;
    }
    }
}

} // namespace trapsusy::cli

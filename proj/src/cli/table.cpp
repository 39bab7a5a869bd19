#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "transmute/cli.hpp"

namespace transmute::cli {
namespace {

std::string render_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    const auto& s = std::get<std::string>(cell);
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') {
                quoted += '"';
            }
            quoted += ch;
        }
        return quoted + "\"";
    }
    return s;
}

nlohmann::ordered_json to_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
        if (std::isfinite(*d)) {
            return *d;
        }
        return format_double(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return *i;
    }
    return std::get<std::string>(cell);
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string render_csv(const Table& table) {
    std::string out;
    out += "# transmute-lab " + table.command + "\n";
    for (const auto& c : table.comments) {
        out += "# " + c + "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + render_cell(row[i]);
        }
        out += "\n";
    }
    for (const auto& [key, value] : table.footer) {
        out += "# " + key + "=" + render_cell(value) + "\n";
    }
    return out;
}

std::string render_json(const Table& table) {
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    doc["comments"] = table.comments;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            r.push_back(to_json(cell));
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    auto footer = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.footer) {
        footer[key] = to_json(value);
    }
    doc["footer"] = std::move(footer);
    return doc.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::Csv ? render_csv(table) : render_json(table);
}

}  // namespace transmute::cli

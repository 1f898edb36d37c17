#include "tracespeed/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tracespeed {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << ',';
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format_double(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Table& table) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out << ", ";
            out << '"' << table.columns[c] << "\": " << format_double(table.rows[r][c]);
        }
        out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
    return out.str();
}

std::string to_svg_chart(const Table& table, const std::string& x_column,
                         const std::vector<std::string>& y_columns, int width, int height) {
    auto column_index = [&](const std::string& name) {
        auto it = std::find(table.columns.begin(), table.columns.end(), name);
        if (it == table.columns.end()) {
            throw std::invalid_argument("to_svg_chart: unknown column " + name);
        }
        return static_cast<std::size_t>(it - table.columns.begin());
    };
    const std::size_t xi = column_index(x_column);
    std::vector<std::size_t> yi;
    yi.reserve(y_columns.size());
    for (const auto& name : y_columns) yi.push_back(column_index(name));

    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool first = true;
    for (const auto& row : table.rows) {
        for (std::size_t c : yi) {
            if (!std::isfinite(row[c])) continue;
            if (first) {
                x_min = x_max = row[xi];
                y_min = y_max = row[c];
                first = false;
            }
            x_min = std::min(x_min, row[xi]);
            x_max = std::max(x_max, row[xi]);
            y_min = std::min(y_min, row[c]);
            y_max = std::max(y_max, row[c]);
        }
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;

    const int margin = 40;
    auto px = [&](double x) {
        return margin + (x - x_min) / (x_max - x_min) * (width - 2 * margin);
    };
    auto py = [&](double y) {
        return height - margin - (y - y_min) / (y_max - y_min) * (height - 2 * margin);
    };

    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t s = 0; s < yi.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << palette[s % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& row : table.rows) {
            if (!std::isfinite(row[yi[s]])) continue;
            out << px(row[xi]) << ',' << py(row[yi[s]]) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << (width - margin + 4) << "\" y=\"" << (margin + 14 * (s + 1))
            << "\" font-size=\"10\" fill=\"" << palette[s % 6] << "\">" << y_columns[s]
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tracespeed

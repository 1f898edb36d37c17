#pragma once

#include <string>
#include <vector>

namespace tracespeed {

/// Numeric table with named columns; the CSV/JSON surface of the CLI.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 17 significant digits, round-trip exact for doubles.
std::string format_double(double v);

/// Comma separated, header row, LF endings, no quoting (numeric fields only).
std::string to_csv(const Table& table);

/// Array of objects keyed by column name.
std::string to_json(const Table& table);

/// Minimal SVG line chart of the y columns against column x_column.
std::string to_svg_chart(const Table& table, const std::string& x_column,
                         const std::vector<std::string>& y_columns, int width = 640,
                         int height = 400);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace tracespeed

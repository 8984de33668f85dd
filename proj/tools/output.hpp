#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace touchdown::cli {

/// One CSV record. Cells are already formatted; fields containing commas or quotes get quoted.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

/// Shortest decimal that round-trips to the same double.
std::string fmt(double v);

struct Series {
    std::string label;
    std::vector<double> x, y;
};

/// Self-contained SVG with one polyline per series, axes and min/max tick labels.
std::string svg_plot(const std::vector<Series>& series, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel);

/// Writes text to path, throwing std::runtime_error when the file cannot be opened.
void write_file(const std::string& path, const std::string& text);

} // namespace touchdown::cli

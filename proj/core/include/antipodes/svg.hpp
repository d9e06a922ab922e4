#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace antipodes {

struct LogLogLine {
    double slope = 0.0;
    double intercept = 0.0;  // log2 y = slope * log2 x + intercept
};

struct LogLogPlot {
    std::string title;
    std::string x_label = "epsilon";
    std::string y_label = "neighbors / antipodes";
    std::span<const std::pair<double, double>> points;  // positive (x, y)
    std::optional<LogLogLine> fit;
};

// Standalone SVG scatter on log2 axes, with the fitted line if present.
void write_loglog_svg(std::ostream& out, const LogLogPlot& plot);

}  // namespace antipodes

#pragma once

#include <cstddef>
#include <span>

namespace antipodes {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points = 0;
};

// Ordinary least squares y = slope * x + intercept. Needs at least two
// distinct x values. r_squared is 1 when the fit is exact (including a
// constant y).
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace antipodes

#pragma once

#include <cstddef>

#include "antipodes/geometry.hpp"

namespace antipodes {

// Intersection of the annuli {1 - eps <= |x - a| <= 1} and
// {1 - eps <= |x - b| <= 1} for anchors a = (-d/2, 0), b = (d/2, 0),
// upper component.
struct LensGeometry {
    double d = 0.0;
    double epsilon = 0.0;
    double y_outer = 0.0;     // outer circles meet on the y axis
    double y_inner = 0.0;     // inner circles meet on the y axis
    double x_side = 0.0;      // outer circle of one anchor meets inner circle of the other at (+-x_side, y_side)
    double y_side = 0.0;
    double side_width = 0.0;  // 2 * x_side
    std::size_t cover_count = 0;  // ceil(kLensCoverConstant / d)
};

// Ceiling used for the cover estimate; measured by lens_cover_audit.
inline constexpr double kLensCoverConstant = 80.0;

// Requires eps <= d <= min(1, 2 - 2 eps) so that all intersection points
// exist.
LensGeometry annuli_intersection(double d, const Epsilon& eps);

struct LensCover {
    std::size_t cells = 0;       // eps/4 grid cells meeting the enlarged lens
    double enlargement = 0.0;    // radial slack added to each annulus
    double constant = 0.0;       // cells * d
};

// Rasterizes the lens with each annulus widened by the eps/4 cell diagonal
// (anchors may move anywhere inside their boxes) onto the origin-anchored
// eps/4 grid, and counts the cells of the upper component that meet it.
// Requires 10 sqrt(eps) <= d <= 1.
LensCover lens_cover_audit(double d, const Epsilon& eps);

}  // namespace antipodes

#include "antipodes/lens.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "antipodes/errors.hpp"

namespace antipodes {
namespace {

// All three intersection points exist.
void check_lens_exists(double d, const Epsilon& eps) {
    const double e = eps.value();
    if (!(d >= e && d <= 1.0 && d <= 2.0 * (1.0 - e))) {
        throw InputError("gap d = " + std::to_string(d) + " must lie in [eps, min(1, 2 - 2 eps)]");
    }
}

void check_gap(double d, const Epsilon& eps) {
    const double lo = 10.0 * std::sqrt(eps.value());
    if (!(d >= lo && d <= 1.0)) {
        throw InputError("gap d = " + std::to_string(d) + " must lie in [10 sqrt(eps), 1] = [" +
                         std::to_string(lo) + ", 1]");
    }
}

struct Disc {
    double cx;
    double r;
};

// Closed region {lo <= |p - a| <= hi} & {lo <= |p - b| <= hi} with anchors
// on the x axis.
struct Lens {
    double ax;
    double bx;
    double lo;
    double hi;

    bool contains(double x, double y) const {
        constexpr double tol = 1e-12;
        const double da = std::hypot(x - ax, y);
        const double db = std::hypot(x - bx, y);
        return da >= lo - tol && da <= hi + tol && db >= lo - tol && db <= hi + tol;
    }

    std::array<Disc, 4> circles() const { return {{{ax, lo}, {ax, hi}, {bx, lo}, {bx, hi}}}; }
};

// Exact test whether a closed cell meets the lens: either a cell corner
// lies in the lens, a lens vertex lies in the cell, or a cell edge crosses
// one of the four circles at a lens point.
bool cell_meets(const Lens& lens, double x0, double x1, double y0, double y1) {
    for (double x : {x0, x1}) {
        for (double y : {y0, y1}) {
            if (lens.contains(x, y)) {
                return true;
            }
        }
    }
    const double d = lens.bx - lens.ax;
    for (double ra : {lens.lo, lens.hi}) {
        for (double rb : {lens.lo, lens.hi}) {
            const double x = (ra * ra - rb * rb) / (2.0 * d);
            const double h = ra * ra - (x - lens.ax) * (x - lens.ax);
            if (h < 0.0) {
                continue;
            }
            for (double y : {std::sqrt(h), -std::sqrt(h)}) {
                if (x >= x0 && x <= x1 && y >= y0 && y <= y1) {
                    return true;
                }
            }
        }
    }
    for (const Disc& c : lens.circles()) {
        // Vertical edges.
        for (double x : {x0, x1}) {
            const double h = c.r * c.r - (x - c.cx) * (x - c.cx);
            if (h < 0.0) {
                continue;
            }
            for (double y : {std::sqrt(h), -std::sqrt(h)}) {
                if (y >= y0 && y <= y1 && lens.contains(x, y)) {
                    return true;
                }
            }
        }
        // Horizontal edges.
        for (double y : {y0, y1}) {
            const double h = c.r * c.r - y * y;
            if (h < 0.0) {
                continue;
            }
            for (double x : {c.cx + std::sqrt(h), c.cx - std::sqrt(h)}) {
                if (x >= x0 && x <= x1 && lens.contains(x, y)) {
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

LensGeometry annuli_intersection(double d, const Epsilon& eps) {
    check_lens_exists(d, eps);
    const double e = eps.value();
    LensGeometry g;
    g.d = d;
    g.epsilon = e;
    g.y_outer = std::sqrt(4.0 - d * d) / 2.0;
    g.y_inner = std::sqrt(4.0 - d * d + 4.0 * e * e - 8.0 * e) / 2.0;
    g.x_side = (2.0 * e - e * e) / (2.0 * d);
    const double d2 = d * d;
    const double d4 = d2 * d2;
    const double e2 = e * e;
    const double radicand =
        -d4 + 2.0 * d2 * e2 - 4.0 * d2 * e + 4.0 * d2 - e2 * e2 + 4.0 * e2 * e - 4.0 * e2;
    g.y_side = std::sqrt(radicand) / (2.0 * d);
    g.side_width = 2.0 * g.x_side;
    g.cover_count = static_cast<std::size_t>(std::ceil(kLensCoverConstant / d));
    return g;
}

LensCover lens_cover_audit(double d, const Epsilon& eps) {
    check_gap(d, eps);
    const double e = eps.value();
    const double side = e / 4.0;
    LensCover cover;
    cover.enlargement = side * std::sqrt(2.0);
    const Lens lens{-d / 2.0, d / 2.0, 1.0 - e - cover.enlargement, 1.0 + cover.enlargement};
    auto meets = [&](std::int64_t i, std::int64_t j) {
        return cell_meets(lens, static_cast<double>(i) * side, static_cast<double>(i + 1) * side,
                          static_cast<double>(j) * side, static_cast<double>(j + 1) * side);
    };
    // Flood fill from the cell holding the midpoint of the axis segment;
    // the lower component lies far below and is never reached.
    const double seed_y = (std::sqrt(4.0 - d * d) / 2.0 +
                           std::sqrt(4.0 - d * d + 4.0 * e * e - 8.0 * e) / 2.0) / 2.0;
    const std::array<std::int64_t, 2> seed{static_cast<std::int64_t>(std::floor(0.0 / side)),
                                           static_cast<std::int64_t>(std::floor(seed_y / side))};
    std::set<std::array<std::int64_t, 2>> seen{seed};
    std::vector<std::array<std::int64_t, 2>> stack{seed};
    while (!stack.empty()) {
        const auto c = stack.back();
        stack.pop_back();
        for (std::int64_t di = -1; di <= 1; ++di) {
            for (std::int64_t dj = -1; dj <= 1; ++dj) {
                const std::array<std::int64_t, 2> n{c[0] + di, c[1] + dj};
                if (!seen.contains(n) && meets(n[0], n[1])) {
                    seen.insert(n);
                    stack.push_back(n);
                }
            }
        }
    }
    cover.cells = seen.size();
    cover.constant = static_cast<double>(cover.cells) * d;
    return cover;
}

}  // namespace antipodes

#include "antipodes/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "antipodes/errors.hpp"
#include "antipodes/hull.hpp"

namespace antipodes {
namespace {

void require_finite(std::span<const double> coords) {
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw InputError("point coordinates must be finite");
        }
    }
}

// Farthest pair among hull vertices by rotating calipers.
DiameterResult calipers(std::span<const double> coords, const ConvexHull& hull) {
    const auto& idx = hull.source_indices();
    const std::size_t h = idx.size();
    auto at = [&](std::size_t k) { return coords.subspan(idx[k % h] * 2, 2); };
    auto vec = [&](std::size_t k) { return hull.vertices()[k % h]; };

    DiameterResult best;
    auto consider = [&](std::size_t a, std::size_t b) {
        const double dist = distance(at(a), at(b));
        if (dist > best.value) {
            best = {dist, idx[a % h], idx[b % h]};
        }
    };

    if (h == 1) {
        best = {0.0, idx[0], idx[0]};
        return best;
    }
    if (h == 2) {
        consider(0, 1);
        return best;
    }

    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const Vec2 a = vec(i);
        const Vec2 b = vec(i + 1);
        const Vec2 edge{b.x - a.x, b.y - a.y};
        // Advance j while the next vertex is farther from edge (i, i+1).
        for (std::size_t guard = 0; guard < h; ++guard) {
            const Vec2 p = vec(j);
            const Vec2 q = vec(j + 1);
            const double step = edge.x * (q.y - p.y) - edge.y * (q.x - p.x);
            if (step <= 0.0) {
                break;
            }
            ++j;
        }
        consider(i, j);
        consider(i + 1, j);
    }
    return best;
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw InputError("a point needs at least one coordinate");
    }
    require_finite(coords_);
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Epsilon::Epsilon(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
        throw InputError("epsilon must lie strictly between 0 and 1, got " + std::to_string(value));
    }
}

double distance(const Point& p, const Point& q) {
    if (p.dim() != q.dim()) {
        throw InputError("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                         std::to_string(q.dim()));
    }
    return distance(p.coords(), q.coords());
}

DiameterResult brute_force_diameter(std::size_t dim, std::span<const double> coords) {
    const std::size_t n = coords.size() / dim;
    DiameterResult best;
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = coords.subspan(i * dim, dim);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dist = distance(p, coords.subspan(j * dim, dim));
            if (dist > best.value) {
                best = {dist, i, j};
            }
        }
    }
    return best;
}

DiameterResult compute_diameter(std::size_t dim, std::span<const double> coords) {
    const std::size_t n = coords.size() / dim;
    if (n < 2) {
        return {};
    }
    if (dim == 1) {
        const auto [lo, hi] = std::minmax_element(coords.begin(), coords.end());
        const auto i = static_cast<std::size_t>(lo - coords.begin());
        const auto j = static_cast<std::size_t>(hi - coords.begin());
        return {distance(coords.subspan(i, 1), coords.subspan(j, 1)), std::min(i, j), std::max(i, j)};
    }
    if (dim == 2 && n > 64) {
        return calipers(coords, ConvexHull(coords));
    }
    return brute_force_diameter(dim, coords);
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), n_(dim == 0 ? 0 : coords.size() / dim), coords_(std::move(coords)) {
    if (dim_ == 0) {
        throw InputError("point dimension must be at least 1");
    }
    if (coords_.size() % dim_ != 0) {
        throw InputError("coordinate count is not a multiple of the dimension");
    }
    if (n_ == 0) {
        throw InputError("a point set needs at least one point");
    }
    require_finite(coords_);
    const auto d = compute_diameter(dim_, coords_);
    diameter_ = d.value;
    diameter_pair_ = {d.i, d.j};
}

namespace {
std::vector<double> flatten(const std::vector<Point>& points) {
    if (points.empty()) {
        throw InputError("a point set needs at least one point");
    }
    const std::size_t dim = points.front().dim();
    std::vector<double> flat;
    flat.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (p.dim() != dim) {
            throw InputError("all points of a set must share one dimension");
        }
        flat.insert(flat.end(), p.coords().begin(), p.coords().end());
    }
    return flat;
}
}  // namespace

PointSet::PointSet(const std::vector<Point>& points)
    : PointSet(points.empty() ? 1 : points.front().dim(), flatten(points)) {}

Point PointSet::point(std::size_t i) const {
    const auto c = (*this)[i];
    return Point(std::vector<double>(c.begin(), c.end()));
}

double diameter(const PointSet& ps) { return ps.diameter(); }

std::vector<double> centroid(const PointSet& ps) {
    std::vector<double> c(ps.dim(), 0.0);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto p = ps[i];
        for (std::size_t k = 0; k < ps.dim(); ++k) {
            c[k] += p[k];
        }
    }
    for (double& v : c) {
        v /= static_cast<double>(ps.size());
    }
    return c;
}

PointSet normalize_to_unit_diameter(const PointSet& ps) {
    if (ps.size() < 2) {
        throw InputError("normalization needs at least two points");
    }
    const double diam = ps.diameter();
    if (!(diam > 0.0)) {
        throw InputError("cannot normalize a degenerate set (all points coincide)");
    }
    const auto c = centroid(ps);
    std::vector<double> out(ps.flat());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t k = 0; k < ps.dim(); ++k) {
            double& v = out[i * ps.dim() + k];
            v = (v - c[k]) / diam;
        }
    }
    return PointSet(ps.dim(), std::move(out));
}

PointSet rigid_motion_2d(const PointSet& ps, double angle, double tx, double ty) {
    if (ps.dim() != 2) {
        throw InputError("rigid_motion_2d needs planar points");
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    std::vector<double> out(ps.flat().size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto p = ps[i];
        out[2 * i] = c * p[0] - s * p[1] + tx;
        out[2 * i + 1] = s * p[0] + c * p[1] + ty;
    }
    return PointSet(2, std::move(out));
}

}  // namespace antipodes

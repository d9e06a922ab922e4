#include "antipodes/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "antipodes/errors.hpp"

namespace antipodes {

double point_segment_distance(const Vec2& q, const Vec2& a, const Vec2& b) noexcept {
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double len2 = ex * ex + ey * ey;
    double t = 0.0;
    if (len2 > 0.0) {
        t = std::clamp(((q.x - a.x) * ex + (q.y - a.y) * ey) / len2, 0.0, 1.0);
    }
    const double dx = q.x - (a.x + t * ex);
    const double dy = q.y - (a.y + t * ey);
    return std::sqrt(dx * dx + dy * dy);
}

ConvexHull::ConvexHull(std::span<const double> coords) {
    if (coords.size() % 2 != 0 || coords.empty()) {
        throw InputError("convex hull needs a non-empty planar coordinate array");
    }
    const std::size_t n = coords.size() / 2;
    auto pt = [&](std::size_t i) { return Vec2{coords[2 * i], coords[2 * i + 1]}; };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Vec2 pa = pt(a);
        const Vec2 pb = pt(b);
        return pa.x < pb.x || (pa.x == pb.x && (pa.y < pb.y || (pa.y == pb.y && a < b)));
    });
    // Drop exact duplicates, keeping the lowest index.
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) {
                                return pt(a).x == pt(b).x && pt(a).y == pt(b).y;
                            }),
                order.end());

    if (order.size() == 1) {
        indices_ = {order[0]};
    } else {
        std::vector<std::size_t> chain(2 * order.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            while (k >= 2 && cross(pt(chain[k - 2]), pt(chain[k - 1]), pt(order[i])) <= 0.0) {
                --k;
            }
            chain[k++] = order[i];
        }
        for (std::size_t i = order.size() - 1, lower = k + 1; i-- > 0;) {
            while (k >= lower && cross(pt(chain[k - 2]), pt(chain[k - 1]), pt(order[i])) <= 0.0) {
                --k;
            }
            chain[k++] = order[i];
        }
        chain.resize(k - 1);
        indices_ = std::move(chain);
    }

    vertices_.reserve(indices_.size());
    for (std::size_t i : indices_) {
        vertices_.push_back(pt(i));
    }
}

ConvexHull::ConvexHull(const PointSet& ps) : ConvexHull([&] {
    if (ps.dim() != 2) {
        throw InputError("convex hull is only defined for planar point sets");
    }
    return std::span<const double>(ps.flat());
}()) {}

double ConvexHull::boundary_distance(const Vec2& q) const {
    const std::size_t h = vertices_.size();
    if (h == 1) {
        return point_segment_distance(q, vertices_[0], vertices_[0]);
    }
    if (h == 2) {
        return point_segment_distance(q, vertices_[0], vertices_[1]);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h; ++i) {
        best = std::min(best, point_segment_distance(q, vertices_[i], vertices_[(i + 1) % h]));
    }
    return best;
}

bool ConvexHull::within_boundary_distance(const Vec2& q, double limit) const {
    const std::size_t h = vertices_.size();
    if (h < 3) {
        return boundary_distance(q) <= limit;
    }
    auto edge_ok = [&](std::size_t i) {
        return point_segment_distance(q, vertices_[i % h], vertices_[(i + 1) % h]) <= limit;
    };
    // Locate q in the fan around vertex 0 and try the nearby edges first.
    const Vec2& v0 = vertices_[0];
    std::size_t lo = 1;
    std::size_t hi = h - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (cross(v0, vertices_[mid], q) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if (edge_ok(lo) || edge_ok(0) || edge_ok(h - 1)) {
        return true;
    }
    for (std::size_t i = 0; i < h; ++i) {
        if (edge_ok(i)) {
            return true;
        }
    }
    return false;
}

bool ConvexHull::contains(const Vec2& q, double slack) const {
    const std::size_t h = vertices_.size();
    if (h < 3) {
        return boundary_distance(q) <= slack;
    }
    for (std::size_t i = 0; i < h; ++i) {
        const Vec2& a = vertices_[i];
        const Vec2& b = vertices_[(i + 1) % h];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (cross(a, b, q) < -slack * len) {
            return false;
        }
    }
    return true;
}

}  // namespace antipodes

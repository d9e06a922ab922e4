#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antipodes/geometry.hpp"

namespace antipodes {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double cross(const Vec2& o, const Vec2& a, const Vec2& b) noexcept {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Planar convex hull. Vertices are listed counterclockwise with no three
// consecutive vertices collinear. Degenerate inputs give a single vertex
// (all points equal) or the two endpoints of a segment (collinear input).
class ConvexHull {
public:
    // Andrew's monotone chain, O(n log n). `coords` is a flat x,y array.
    explicit ConvexHull(std::span<const double> coords);
    explicit ConvexHull(const PointSet& ps);

    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<Vec2>& vertices() const noexcept { return vertices_; }
    // Index of each vertex in the input array.
    const std::vector<std::size_t>& source_indices() const noexcept { return indices_; }

    // Distance from q to the hull boundary (edges, or the degenerate
    // segment/point). Zero for points on the boundary.
    double boundary_distance(const Vec2& q) const;
    // True iff boundary_distance(q) <= limit; exits early on the first
    // edge within reach.
    bool within_boundary_distance(const Vec2& q, double limit) const;
    // Closed containment test with an absolute slack on edge orientation.
    bool contains(const Vec2& q, double slack = 0.0) const;

private:
    std::vector<Vec2> vertices_;
    std::vector<std::size_t> indices_;
};

double point_segment_distance(const Vec2& q, const Vec2& a, const Vec2& b) noexcept;

}  // namespace antipodes

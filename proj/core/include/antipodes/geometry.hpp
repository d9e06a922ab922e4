#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace antipodes {

// A point in R^d. Coordinates are finite doubles.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    std::span<const double> coords() const noexcept { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

// Neighbor/antipode scale parameter, strictly inside (0, 1).
class Epsilon {
public:
    explicit Epsilon(double value);

    double value() const noexcept { return value_; }
    // Antipode threshold 1 - eps, computed once so every engine compares
    // against the same double.
    double far_threshold() const noexcept { return 1.0 - value_; }

private:
    double value_;
};

// Euclidean distance over raw coordinate spans. Every counting engine goes
// through this function so that threshold decisions agree bit for bit.
inline double distance(std::span<const double> p, std::span<const double> q) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double diff = p[i] - q[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

// Throws InputError on dimension mismatch.
double distance(const Point& p, const Point& q);

// Immutable set of n >= 1 points of a common dimension, stored flat, with
// the exact diameter computed at construction.
class PointSet {
public:
    PointSet(std::size_t dim, std::vector<double> coords);
    explicit PointSet(const std::vector<Point>& points);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return n_; }
    double diameter() const noexcept { return diameter_; }
    // Indices of one pair realizing the diameter (equal when n == 1).
    std::pair<std::size_t, std::size_t> diameter_pair() const noexcept { return diameter_pair_; }

    std::span<const double> operator[](std::size_t i) const noexcept {
        return {coords_.data() + i * dim_, dim_};
    }
    Point point(std::size_t i) const;
    const std::vector<double>& flat() const noexcept { return coords_; }

private:
    std::size_t dim_;
    std::size_t n_;
    std::vector<double> coords_;
    double diameter_ = 0.0;
    std::pair<std::size_t, std::size_t> diameter_pair_{0, 0};
};

struct DiameterResult {
    double value = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

// Exact maximum pairwise distance of a flat coordinate array. Planar input
// goes through the convex hull and rotating calipers, other dimensions are
// scanned pairwise.
DiameterResult compute_diameter(std::size_t dim, std::span<const double> coords);

// O(n^2) reference scan; used by tests and for small inputs.
DiameterResult brute_force_diameter(std::size_t dim, std::span<const double> coords);

double diameter(const PointSet& ps);

std::vector<double> centroid(const PointSet& ps);

// Centers the set at the origin and scales it by 1/diameter.
// Throws InputError for n < 2 or a zero diameter.
PointSet normalize_to_unit_diameter(const PointSet& ps);

// Planar rigid motion: rotation by `angle` about the origin, then translation.
PointSet rigid_motion_2d(const PointSet& ps, double angle, double tx, double ty);

}  // namespace antipodes

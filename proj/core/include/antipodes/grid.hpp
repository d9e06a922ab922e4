#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "antipodes/geometry.hpp"

namespace antipodes {

// Uniform axis-aligned grid anchored at the origin. The cell of a point is
// floor(coord / cell_side) componentwise; only occupied cells are stored,
// in lexicographic order of their integer keys.
class GridIndex {
public:
    GridIndex(const PointSet& ps, double cell_side);
    // Index only the listed points of `ps`.
    GridIndex(const PointSet& ps, std::span<const std::size_t> subset, double cell_side);

    double cell_side() const noexcept { return side_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t cell_count() const noexcept { return start_.size() - 1; }

    std::span<const std::int64_t> key(std::size_t cell) const noexcept {
        return {keys_.data() + cell * dim_, dim_};
    }
    // Point indices (into the source PointSet) stored in a cell.
    std::span<const std::uint32_t> points(std::size_t cell) const noexcept {
        return {members_.data() + start_[cell], start_[cell + 1] - start_[cell]};
    }
    std::size_t occupancy(std::size_t cell) const noexcept { return start_[cell + 1] - start_[cell]; }

    std::optional<std::size_t> find(std::span<const std::int64_t> key) const;

    // Closed-box extent of a cell along one axis.
    double lower(std::size_t cell, std::size_t axis) const noexcept {
        return static_cast<double>(keys_[cell * dim_ + axis]) * side_;
    }
    double upper(std::size_t cell, std::size_t axis) const noexcept {
        return static_cast<double>(keys_[cell * dim_ + axis] + 1) * side_;
    }

private:
    void build(const PointSet& ps, std::span<const std::size_t> subset);
    std::optional<std::uint64_t> pack(std::span<const std::int64_t> key) const;

    std::size_t dim_ = 0;
    double side_ = 0.0;
    std::vector<std::int64_t> keys_;
    std::vector<std::size_t> start_;
    std::vector<std::uint32_t> members_;
    // Packed keys, when every occupied key fits the mixed radix.
    bool packable_ = false;
    std::vector<std::int64_t> min_key_;
    std::vector<std::uint64_t> radix_;
    std::vector<std::uint64_t> packed_;
};

// Largest and smallest distance between two closed grid boxes; both are
// attained at corners (or axis gaps), so they bound every point pair.
inline double box_max_distance(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                               double side) noexcept {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double lo_a = static_cast<double>(a[k]) * side;
        const double hi_a = static_cast<double>(a[k] + 1) * side;
        const double lo_b = static_cast<double>(b[k]) * side;
        const double hi_b = static_cast<double>(b[k] + 1) * side;
        const double span = std::max(hi_b - lo_a, hi_a - lo_b);
        sum += span * span;
    }
    return std::sqrt(sum);
}

inline double box_min_distance(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                               double side) noexcept {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double lo_a = static_cast<double>(a[k]) * side;
        const double hi_a = static_cast<double>(a[k] + 1) * side;
        const double lo_b = static_cast<double>(b[k]) * side;
        const double hi_b = static_cast<double>(b[k] + 1) * side;
        const double gap = std::max({0.0, lo_b - hi_a, lo_a - hi_b});
        sum += gap * gap;
    }
    return std::sqrt(sum);
}

}  // namespace antipodes

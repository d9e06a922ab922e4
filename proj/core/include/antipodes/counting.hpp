#pragma once

#include <cstddef>
#include <cstdint>

#include "antipodes/finite_metric.hpp"
#include "antipodes/geometry.hpp"

namespace antipodes {

// Ordered pair tallies. Neighbors are pairs (i, j) with distance <= eps,
// the diagonal included; antipodes are pairs with distance >= 1 - eps,
// which never includes the diagonal because eps < 1.
struct PairCounts {
    std::uint64_t neighbors_ordered = 0;
    std::uint64_t antipodes_ordered = 0;
    double epsilon = 0.0;
    std::size_t n = 0;

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

struct CountOptions {
    // Worker threads; 0 uses the hardware concurrency. Results never depend
    // on this value.
    unsigned threads = 0;
};

// Sets larger than this (beyond rounding) are rejected by the counters.
inline constexpr double kDiameterTolerance = 1e-9;

// Throws ContractError when diam(ps) > 1 + kDiameterTolerance.
void require_unit_diameter(const PointSet& ps);

PairCounts count_pairs_brute(const PointSet& ps, const Epsilon& eps, const CountOptions& opts = {});

// Same counts as count_pairs_brute, via an eps-cell hash for neighbors and
// cell-pair pruning for antipodes.
PairCounts count_pairs_grid(const PointSet& ps, const Epsilon& eps, const CountOptions& opts = {});

// Ordered pairs with d <= near and d >= far. Requires 0 < near < far <= diam.
PairCounts count_pairs_metric(const FiniteMetric& m, double near, double far);

struct PigeonholeBound {
    std::size_t k_cover = 0;
    std::uint64_t bound = 0;  // ceil(n^2 / k_cover)
    std::uint64_t sum_squares = 0;  // sum of squared cell occupancies
};

// Covers the set by cells of side eps/4; points sharing a cell are
// neighbors, so neighbors_ordered >= sum_squares >= bound.
PigeonholeBound pigeonhole_lower_bound(const PointSet& ps, const Epsilon& eps);

// Cap on the number of cells used by the antipode pass; the cell side is
// doubled from eps until the grid fits. Cells are then grouped into blocks
// (about 4 sqrt(cells) of them) whose pairs are pruned first.
inline constexpr std::size_t kMaxAntipodeCells = 1 << 16;


}  // namespace antipodes

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "antipodes/geometry.hpp"
#include "antipodes/hull.hpp"
#include "antipodes/matrix.hpp"

namespace antipodes {

ConvexHull convex_hull(const PointSet& ps);

struct StripFilter {
    PointSet strip;                      // surviving points
    std::vector<std::size_t> kept;       // their indices in the input
    std::vector<std::size_t> removed;    // indices farther than eps from the hull boundary
};

// Keeps exactly the points within distance eps of the hull boundary.
// Points deeper inside cannot be part of an antipodal pair.
StripFilter filter_boundary_strip(const PointSet& ps, const ConvexHull& hull, const Epsilon& eps);

// Brute-force soundness check of a filter: no removed point has a partner
// at distance >= 1 - eps.
bool strip_filter_is_sound(const PointSet& ps, std::span<const std::size_t> removed,
                           const Epsilon& eps);

// Empirical ceiling for k * eps recorded for unit-diameter planar sets
// (a filled strip along a circle of width 1 gives about 16 pi).
inline constexpr double kBoxCountConstant = 100.0;

// Occupied cells of the eps/4 grid anchored at the origin, in
// lexicographic order of integer cell coordinates.
struct BoxPartition {
    double cell_side = 0.0;
    std::size_t dim = 2;
    std::vector<std::int64_t> keys;       // k x dim
    std::vector<std::uint64_t> occupancy; // n_i

    std::size_t k() const noexcept { return occupancy.size(); }
    std::span<const std::int64_t> key(std::size_t i) const noexcept {
        return {keys.data() + i * dim, dim};
    }
};

BoxPartition partition_boxes(const PointSet& ps, const Epsilon& eps);

std::uint64_t norm_squared(std::span<const std::uint64_t> n);

// M_ij = 1 iff the largest corner-to-corner distance between closed cells
// i and j is >= 1 - eps.
AntipodalityMatrix antipodality_matrix(const BoxPartition& bp, const Epsilon& eps,
                                       unsigned threads = 0);

// Relative slack on the two chain links that involve the eigenvalue
// estimate; every other link is an exact integer comparison.
inline constexpr double kEigenSlack = 1e-8;

struct ChainFlags {
    bool antipodes_le_quad_form = false;   // exact antipodes <= <n, Mn>
    bool neighbors_ge_norm_sq = false;     // exact neighbors >= |n|^2
    bool quad_form_le_spectral = false;    // <n, Mn> <= lambda_1 |n|^2
    bool spectral_le_trace = false;        // lambda_1 <= sqrt(tr(M^T M))
};

struct BoundReport {
    std::size_t n = 0;
    double epsilon = 0.0;
    std::size_t hull_size = 0;
    std::size_t strip_size = 0;
    std::uint64_t exact_antipodes = 0;
    std::uint64_t exact_neighbors = 0;
    std::uint64_t quad_form = 0;
    std::uint64_t norm_sq = 0;
    double lambda1 = 0.0;
    double lambda1_upper = 0.0;
    std::size_t lambda1_iterations = 0;
    std::uint64_t trace_mtm = 0;
    std::size_t k = 0;
    double k_times_eps = 0.0;
    ChainFlags flags;
    bool chain_ok = false;
};

struct BoundOptions {
    unsigned threads = 0;
    // Re-check the strip filter by brute force (always on in debug builds).
    bool verify_filter = false;
};

struct BoundRun {
    BoundReport report;
    BoxPartition partition;
    AntipodalityMatrix matrix;
};

// Hull, strip filter, partition, matrix and spectral bounds, with exact
// counts over the full input. Planar sets of diameter <= 1 only.
BoundRun run_bound_pipeline(const PointSet& ps, const Epsilon& eps, const BoundOptions& opts = {});
BoundReport bound_report(const PointSet& ps, const Epsilon& eps, const BoundOptions& opts = {});

}  // namespace antipodes

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antipodes/matrix.hpp"
#include "antipodes/pipeline.hpp"

namespace antipodes {

// Boxes as vertices, antipodal box pairs as edges. Cell coordinates are
// kept so that geometric neighborhoods can be formed.
class BoxGraph {
public:
    BoxGraph() = default;
    BoxGraph(const BoxPartition& bp, const AntipodalityMatrix& m);
    // Loops (i, i) are ignored.
    BoxGraph(double cell_side, std::vector<std::int64_t> keys,
             std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

    std::size_t k() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    double cell_side() const noexcept { return cell_side_; }
    std::span<const std::int64_t> key(std::size_t v) const noexcept { return {keys_.data() + 2 * v, 2}; }
    const std::vector<std::uint32_t>& neighbors(std::size_t v) const noexcept { return adjacency_[v]; }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

private:
    double cell_side_ = 0.0;
    std::vector<std::int64_t> keys_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::size_t edges_ = 0;
};

// Edge-list text format:
//   k <k> edges <m> cell_side <s>
//   k lines "x y" of integer cell coordinates
//   m lines "i j" with i < j
void write_edge_list(std::ostream& out, const BoxGraph& g);
BoxGraph read_edge_list(std::istream& in);
BoxGraph read_edge_list_file(const std::string& path);

struct ProfileRow {
    std::size_t s = 0;
    std::size_t count = 0;  // max over v of #{w outside N_v : |N(v) & N(w)| >= s}
};

struct NeighborProfile {
    double forbidden_radius = 0.0;
    std::vector<ProfileRow> rows;         // s = 1, 2, 4, ... <= max(k, 1)
    std::size_t max_forbidden = 0;        // max_v |N_v|
    double c_forbidden = 0.0;             // max_v |N_v| / sqrt(k)
    double c_emp = 0.0;                   // max_s s * count_s / k
};

inline double default_forbidden_radius(double eps) { return 10.0 * std::sqrt(eps); }

// N_v holds the boxes (v included) whose closed cells come within
// forbidden_radius of cell v.
NeighborProfile common_neighbor_profile(const BoxGraph& g, double forbidden_radius,
                                        unsigned threads = 0);

struct EdgeGrowth {
    double slope = 0.0;            // fit of log|E| against log k
    double intercept = 0.0;
    double r_squared = 0.0;
    double corrected_slope = 0.0;  // same after subtracting 0.5 log log k
    double log_coefficient = 0.0;  // intercept of the corrected fit
    double corrected_r_squared = 0.0;
};

// Needs at least 4 samples with distinct k >= 2 and |E| >= 1.
EdgeGrowth edge_growth_check(std::span<const std::pair<std::size_t, std::size_t>> samples);

}  // namespace antipodes

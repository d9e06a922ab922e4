#include "antipodes/pipeline.hpp"

#include <cmath>
#include <string>

#include "antipodes/counting.hpp"
#include "antipodes/errors.hpp"
#include "antipodes/grid.hpp"
#include "antipodes/spectral.hpp"
#include "parallel.hpp"

namespace antipodes {

ConvexHull convex_hull(const PointSet& ps) { return ConvexHull(ps); }

StripFilter filter_boundary_strip(const PointSet& ps, const ConvexHull& hull, const Epsilon& eps) {
    if (ps.dim() != 2) {
        throw InputError("the boundary strip filter needs planar points");
    }
    std::vector<char> on_hull(ps.size(), 0);
    for (std::size_t i : hull.source_indices()) {
        on_hull[i] = 1;
    }
    std::vector<std::size_t> kept;
    std::vector<std::size_t> removed;
    std::vector<double> coords;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto p = ps[i];
        if (on_hull[i] || hull.within_boundary_distance({p[0], p[1]}, eps.value())) {
            kept.push_back(i);
            coords.push_back(p[0]);
            coords.push_back(p[1]);
        } else {
            removed.push_back(i);
        }
    }
    return {PointSet(2, std::move(coords)), std::move(kept), std::move(removed)};
}

bool strip_filter_is_sound(const PointSet& ps, std::span<const std::size_t> removed,
                           const Epsilon& eps) {
    const double far = eps.far_threshold();
    for (std::size_t i : removed) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (distance(ps[i], ps[j]) >= far) {
                return false;
            }
        }
    }
    return true;
}

BoxPartition partition_boxes(const PointSet& ps, const Epsilon& eps) {
    const GridIndex grid(ps, eps.value() / 4.0);
    BoxPartition bp;
    bp.cell_side = grid.cell_side();
    bp.dim = ps.dim();
    bp.keys.reserve(grid.cell_count() * ps.dim());
    bp.occupancy.reserve(grid.cell_count());
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
        const auto key = grid.key(c);
        bp.keys.insert(bp.keys.end(), key.begin(), key.end());
        bp.occupancy.push_back(grid.occupancy(c));
    }
    return bp;
}

std::uint64_t norm_squared(std::span<const std::uint64_t> n) {
    std::uint64_t total = 0;
    for (auto v : n) {
        total += v * v;
    }
    return total;
}

AntipodalityMatrix antipodality_matrix(const BoxPartition& bp, const Epsilon& eps, unsigned threads) {
    const std::size_t k = bp.k();
    const double far = eps.far_threshold();
    using Pair = std::pair<std::uint32_t, std::uint32_t>;
    // Rows are assembled independently, then concatenated in row order, so
    // the result does not depend on the thread schedule.
    std::vector<std::vector<std::uint32_t>> upper(k);
    detail::parallel_chunks(k, threads, 32, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto key_i = bp.key(i);
            for (std::size_t j = i; j < k; ++j) {
                if (box_max_distance(key_i, bp.key(j), bp.cell_side) >= far) {
                    upper[i].push_back(static_cast<std::uint32_t>(j));
                }
            }
        }
    });
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::uint32_t j : upper[i]) {
            pairs.emplace_back(static_cast<std::uint32_t>(i), j);
        }
    }
    return AntipodalityMatrix(k, pairs);
}

BoundRun run_bound_pipeline(const PointSet& ps, const Epsilon& eps, const BoundOptions& opts) {
    if (ps.dim() != 2) {
        throw InputError("the certificate pipeline is planar; got dimension " +
                         std::to_string(ps.dim()));
    }
    require_unit_diameter(ps);

    BoundRun run;
    BoundReport& r = run.report;
    r.n = ps.size();
    r.epsilon = eps.value();

    const auto counts = count_pairs_grid(ps, eps, CountOptions{opts.threads});
    r.exact_antipodes = counts.antipodes_ordered;
    r.exact_neighbors = counts.neighbors_ordered;

    const ConvexHull hull = convex_hull(ps);
    r.hull_size = hull.size();
    const StripFilter filtered = filter_boundary_strip(ps, hull, eps);
    r.strip_size = filtered.strip.size();
    bool verify = opts.verify_filter;
#ifndef NDEBUG
    verify = true;
#endif
    if (verify && !strip_filter_is_sound(ps, filtered.removed, eps)) {
        throw ContractError("boundary strip filter removed a point with an antipodal partner");
    }

    run.partition = partition_boxes(filtered.strip, eps);
    r.k = run.partition.k();
    r.k_times_eps = static_cast<double>(r.k) * eps.value();
    run.matrix = antipodality_matrix(run.partition, eps, opts.threads);

    r.quad_form = quadratic_form(run.matrix, run.partition.occupancy);
    r.norm_sq = norm_squared(run.partition.occupancy);
    r.trace_mtm = trace_mtm(run.matrix);
    const EigenEstimate lambda = top_eigenvalue(run.matrix);
    r.lambda1 = lambda.value;
    r.lambda1_upper = lambda.upper;
    r.lambda1_iterations = lambda.iterations;

    const double norm_sq = static_cast<double>(r.norm_sq);
    r.flags.antipodes_le_quad_form = r.exact_antipodes <= r.quad_form;
    r.flags.neighbors_ge_norm_sq = r.exact_neighbors >= r.norm_sq;
    r.flags.quad_form_le_spectral =
        static_cast<double>(r.quad_form) <= r.lambda1 * norm_sq * (1.0 + kEigenSlack);
    r.flags.spectral_le_trace =
        r.lambda1 <= std::sqrt(static_cast<double>(r.trace_mtm)) * (1.0 + kEigenSlack);
    r.chain_ok = r.flags.antipodes_le_quad_form && r.flags.neighbors_ge_norm_sq &&
                 r.flags.quad_form_le_spectral && r.flags.spectral_le_trace;
    return run;
}

BoundReport bound_report(const PointSet& ps, const Epsilon& eps, const BoundOptions& opts) {
    return run_bound_pipeline(ps, eps, opts).report;
}

}  // namespace antipodes

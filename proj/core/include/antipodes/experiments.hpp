#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antipodes/generators.hpp"
#include "antipodes/geometry.hpp"
#include "antipodes/pipeline.hpp"

namespace antipodes {

struct SweepRow {
    double epsilon = 0.0;
    std::size_t n = 0;
    std::uint64_t neighbors = 0;
    std::uint64_t antipodes = 0;
    // neighbors / antipodes; empty when there are no antipodes.
    std::optional<double> ratio;
    std::optional<BoundReport> bounds;
};

struct SweepOptions {
    bool with_bounds = false;
    unsigned threads = 0;
};

// Rows warn below this many antipodes per point.
inline constexpr double kMinAntipodesPerPoint = 10.0;

// One row per epsilon (strictly decreasing). The point set is regenerated
// for each epsilon when the family depends on it. Warnings about thin rows
// are appended to `warnings` when given.
std::vector<SweepRow> sweep(const GeneratorSpec& spec, std::span<const double> eps_list,
                            const SweepOptions& opts = {},
                            std::vector<std::string>* warnings = nullptr);

// 2^-a, ..., 2^-b for a <= b.
std::vector<double> dyadic_epsilons(int a, int b);

struct ScalingFit {
    double slope = 0.0;       // alpha in ratio ~ eps^alpha
    double intercept = 0.0;   // in log2 units
    double r_squared = 0.0;
    double eps_min = 0.0;
    double eps_max = 0.0;
    std::size_t rows_used = 0;
    std::size_t rows_excluded = 0;  // rows without a ratio
};

// Least squares of log2 ratio against log2 eps over rows that have a
// ratio; needs at least 4 of them.
ScalingFit fit_exponent(std::span<const SweepRow> rows);

struct SearchSchedule {
    std::size_t proposals = 200000;
    double cooling = 0.999;          // temperature factor per proposal
    double sigma_start = 1.0;        // in units of eps
    double sigma_end = 0.01;         // in units of eps
    std::size_t trace_points = 1000; // objective samples kept in the trace
};

struct SearchResult {
    explicit SearchResult(PointSet start) : best(std::move(start)) {}

    PointSet best;
    double best_objective = 0.0;
    double initial_objective = 0.0;
    double final_objective = 0.0;
    std::uint64_t best_neighbors = 0;
    std::uint64_t best_antipodes = 0;
    std::size_t accepted = 0;
    std::size_t proposals = 0;
    std::uint64_t seed = 0;
    double final_temperature = 0.0;
    bool reseeded = false;
    // (proposal index, current objective) samples, first and last included.
    std::vector<std::pair<std::size_t, double>> trace;
};

inline constexpr std::size_t kMaxSearchPoints = 5000;

// Simulated annealing on neighbors / antipodes at fixed eps, planar sets
// of diameter 1. Starts from `start` (or gen_circle(n)); a start with no
// antipodes is replaced by gen_circle(n). Deterministic for a given seed.
SearchResult extremal_search(std::size_t n, const Epsilon& eps, std::uint64_t seed,
                             const SearchSchedule& schedule = {},
                             const std::optional<PointSet>& start = std::nullopt);

// 0.005 * eps^(3/4) * log(1/eps)^(-1/4): the floor the ratio
// neighbors / antipodes is checked against.
double theorem_floor(double eps);

}  // namespace antipodes

#include "antipodes/experiments.hpp"

#include <cmath>
#include <sstream>

#include "antipodes/counting.hpp"
#include "antipodes/errors.hpp"
#include "antipodes/regression.hpp"

namespace antipodes {

std::vector<double> dyadic_epsilons(int a, int b) {
    if (a < 1 || b < a || b > 60) {
        throw InputError("dyadic range a:b needs 1 <= a <= b <= 60");
    }
    std::vector<double> out;
    for (int e = a; e <= b; ++e) {
        out.push_back(std::ldexp(1.0, -e));
    }
    return out;
}

std::vector<SweepRow> sweep(const GeneratorSpec& spec, std::span<const double> eps_list,
                            const SweepOptions& opts, std::vector<std::string>* warnings) {
    if (eps_list.empty()) {
        throw InputError("sweep needs at least one epsilon");
    }
    for (std::size_t i = 1; i < eps_list.size(); ++i) {
        if (!(eps_list[i] < eps_list[i - 1])) {
            throw InputError("sweep epsilons must be strictly decreasing");
        }
    }
    std::optional<PointSet> fixed;
    std::vector<SweepRow> rows;
    for (double e : eps_list) {
        const Epsilon eps(e);
        GeneratorSpec row_spec = spec;
        row_spec.epsilon = e;
        if (family_uses_epsilon(spec.family) || (spec.family == Family::polygon && spec.k == 0)) {
            fixed.reset();
        }
        if (!fixed) {
            fixed = generate(row_spec);
        }
        const PointSet& ps = *fixed;
        const PairCounts counts = count_pairs_grid(ps, eps, CountOptions{opts.threads});
        SweepRow row;
        row.epsilon = e;
        row.n = ps.size();
        row.neighbors = counts.neighbors_ordered;
        row.antipodes = counts.antipodes_ordered;
        if (row.antipodes > 0) {
            row.ratio = static_cast<double>(row.neighbors) / static_cast<double>(row.antipodes);
        }
        if (opts.with_bounds) {
            row.bounds = bound_report(ps, eps, BoundOptions{opts.threads, false});
        }
        const double per_point = static_cast<double>(row.antipodes) / static_cast<double>(row.n);
        if (warnings && per_point < kMinAntipodesPerPoint) {
            std::ostringstream msg;
            msg << "eps=" << e << ": " << per_point << " antipodes per point (< "
                << kMinAntipodesPerPoint << "); increase n";
            warnings->push_back(msg.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ScalingFit fit_exponent(std::span<const SweepRow> rows) {
    std::vector<double> x;
    std::vector<double> y;
    ScalingFit fit;
    for (const auto& row : rows) {
        if (!row.ratio || !(*row.ratio > 0.0)) {
            ++fit.rows_excluded;
            continue;
        }
        x.push_back(std::log2(row.epsilon));
        y.push_back(std::log2(*row.ratio));
        if (fit.rows_used == 0) {
            fit.eps_min = fit.eps_max = row.epsilon;
        }
        fit.eps_min = std::min(fit.eps_min, row.epsilon);
        fit.eps_max = std::max(fit.eps_max, row.epsilon);
        ++fit.rows_used;
    }
    if (fit.rows_used < 4) {
        throw InputError("exponent fit needs at least 4 rows with antipodes, got " +
                         std::to_string(fit.rows_used));
    }
    const LinearFit lf = least_squares(x, y);
    fit.slope = lf.slope;
    fit.intercept = lf.intercept;
    fit.r_squared = lf.r_squared;
    return fit;
}

double theorem_floor(double eps) {
    return 0.005 * std::pow(eps, 0.75) * std::pow(std::log(1.0 / eps), -0.25);
}

}  // namespace antipodes

#include <cmath>
#include <limits>
#include <random>

#include "antipodes/counting.hpp"
#include "antipodes/errors.hpp"
#include "antipodes/experiments.hpp"

namespace antipodes {
namespace {

struct Tally {
    std::uint64_t neighbors = 0;
    std::uint64_t antipodes = 0;

    double objective() const {
        return antipodes == 0 ? std::numeric_limits<double>::infinity()
                              : static_cast<double>(neighbors) / static_cast<double>(antipodes);
    }
};

Tally recount(const PointSet& ps, const Epsilon& eps) {
    const auto c = count_pairs_grid(ps, eps, CountOptions{1});
    return {c.neighbors_ordered, c.antipodes_ordered};
}

// Neighbors and antipodes of q among all points except `skip`, plus the
// largest distance from q to them.
struct Contribution {
    std::uint64_t neighbors = 0;
    std::uint64_t antipodes = 0;
    double reach = 0.0;
};

Contribution contribution(const std::vector<double>& flat, std::size_t skip, const double* q,
                          const Epsilon& eps) {
    Contribution c;
    const std::size_t n = flat.size() / 2;
    const std::span<const double> qs(q, 2);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) {
            continue;
        }
        const double dist = distance(qs, std::span<const double>(flat.data() + 2 * j, 2));
        c.neighbors += dist <= eps.value() ? 1 : 0;
        c.antipodes += dist >= eps.far_threshold() ? 1 : 0;
        c.reach = std::max(c.reach, dist);
    }
    return c;
}

}  // namespace

SearchResult extremal_search(std::size_t n, const Epsilon& eps, std::uint64_t seed,
                             const SearchSchedule& schedule, const std::optional<PointSet>& start) {
    if (n < 3 || n > kMaxSearchPoints) {
        throw InputError("search needs 3 <= n <= " + std::to_string(kMaxSearchPoints));
    }
    if (schedule.proposals == 0 || !(schedule.cooling > 0.0 && schedule.cooling <= 1.0) ||
        !(schedule.sigma_start > 0.0) || !(schedule.sigma_end > 0.0)) {
        throw InputError("search schedule needs proposals >= 1, cooling in (0, 1] and positive step sizes");
    }
    if (start && (start->size() != n || start->dim() != 2)) {
        throw InputError("search start must hold n planar points");
    }

    PointSet current = normalize_to_unit_diameter(start ? *start : gen_circle(n));
    Tally tally = recount(current, eps);
    bool reseeded = false;
    if (tally.antipodes == 0) {
        current = normalize_to_unit_diameter(gen_circle(n));
        tally = recount(current, eps);
        reseeded = true;
    }
    SearchResult result(current);
    result.seed = seed;
    result.reseeded = reseeded;
    std::vector<double> flat(current.flat().begin(), current.flat().end());
    std::pair<std::size_t, std::size_t> diam_pair = current.diameter_pair();
    double diam = current.diameter();

    double objective = tally.objective();
    result.initial_objective = objective;
    result.best_objective = objective;
    result.best_neighbors = tally.neighbors;
    result.best_antipodes = tally.antipodes;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Running tallies are checked against a full grid recount this often
    // (after every accepted move in debug builds).
#ifdef NDEBUG
    constexpr std::size_t verify_every = 1024;
#else
    constexpr std::size_t verify_every = 1;
#endif
    auto verify = [&]() {
        const Tally exact = recount(PointSet(2, std::vector<double>(flat)), eps);
        if (exact.neighbors != tally.neighbors || exact.antipodes != tally.antipodes) {
            throw ContractError("incremental search counts drifted from the exact recount");
        }
    };

    const std::size_t proposals = schedule.proposals;
    const std::size_t stride = std::max<std::size_t>(1, proposals / std::max<std::size_t>(1, schedule.trace_points));
    double temperature = objective;
    result.trace.emplace_back(0, objective);

    for (std::size_t t = 0; t < proposals; ++t) {
        const double progress =
            proposals > 1 ? static_cast<double>(t) / static_cast<double>(proposals - 1) : 0.0;
        const double sigma = eps.value() * schedule.sigma_start *
                             std::pow(schedule.sigma_end / schedule.sigma_start, progress);
        const std::size_t i = pick(rng);
        const double q[2] = {flat[2 * i] + sigma * gauss(rng), flat[2 * i + 1] + sigma * gauss(rng)};
        const double u = unit(rng);

        const Contribution after = contribution(flat, i, q, eps);
        std::optional<PointSet> rescaled;
        Tally proposed;
        if (i != diam_pair.first && i != diam_pair.second && after.reach <= diam) {
            // The diameter pair survives, so only pairs through i change.
            const Contribution before = contribution(flat, i, flat.data() + 2 * i, eps);
            proposed.neighbors = tally.neighbors - 2 * before.neighbors + 2 * after.neighbors;
            proposed.antipodes = tally.antipodes - 2 * before.antipodes + 2 * after.antipodes;
        } else {
            std::vector<double> candidate = flat;
            candidate[2 * i] = q[0];
            candidate[2 * i + 1] = q[1];
            rescaled = normalize_to_unit_diameter(PointSet(2, std::move(candidate)));
            proposed = recount(*rescaled, eps);
        }
        const double next = proposed.objective();
        const bool accept =
            std::isfinite(next) &&
            (next <= objective || (temperature > 0.0 && u < std::exp(-(next - objective) / temperature)));
        if (accept) {
            if (rescaled) {
                flat.assign(rescaled->flat().begin(), rescaled->flat().end());
                diam_pair = rescaled->diameter_pair();
                diam = rescaled->diameter();
            } else {
                flat[2 * i] = q[0];
                flat[2 * i + 1] = q[1];
            }
            tally = proposed;
            objective = next;
            ++result.accepted;
            if (result.accepted % verify_every == 0) {
                verify();
            }
            if (objective < result.best_objective) {
                result.best = PointSet(2, std::vector<double>(flat));
                result.best_objective = objective;
                result.best_neighbors = tally.neighbors;
                result.best_antipodes = tally.antipodes;
            }
        }
        temperature *= schedule.cooling;
        if ((t + 1) % stride == 0 || t + 1 == proposals) {
            if (result.trace.back().first != t + 1) {
                result.trace.emplace_back(t + 1, objective);
            }
        }
    }
    verify();
    result.proposals = proposals;
    result.final_objective = objective;
    result.final_temperature = temperature;
    return result;
}

}  // namespace antipodes

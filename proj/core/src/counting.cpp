#include "antipodes/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "antipodes/errors.hpp"
#include "antipodes/grid.hpp"
#include "parallel.hpp"

namespace antipodes {
namespace {

// Neighbor cells are widened by this relative amount so that rounding in
// floor(x / side) can never push a true neighbor outside the 3^d stencil.
constexpr double kCellGuard = 1e-9;
// Cell pairs are accepted or rejected wholesale only when the box bound
// clears the threshold by this much; anything closer is scanned point by
// point with the exact comparison.
constexpr double kPruneSlack = 1e-9;

struct Tally {
    std::uint64_t neighbors = 0;
    std::uint64_t antipodes = 0;
};

std::uint64_t count_neighbors_grid(const PointSet& ps, double eps, unsigned threads) {
    const GridIndex grid(ps, eps * (1.0 + kCellGuard));
    const std::size_t d = ps.dim();
    std::size_t stencil_size = 1;
    for (std::size_t k = 0; k < d; ++k) {
        stencil_size *= 3;
    }
    std::vector<std::uint64_t> partial(detail::worker_slots(threads), 0);

    detail::parallel_chunks(grid.cell_count(), threads, 16, [&](std::size_t begin, std::size_t end,
                                                                unsigned w) {
        std::vector<std::int64_t> probe(d);
        std::uint64_t local = 0;
        for (std::size_t a = begin; a < end; ++a) {
            const auto key_a = grid.key(a);
            const auto pts_a = grid.points(a);
            // Same cell: diagonal plus both orders of every close pair.
            local += pts_a.size();
            for (std::size_t i = 0; i < pts_a.size(); ++i) {
                for (std::size_t j = i + 1; j < pts_a.size(); ++j) {
                    if (distance(ps[pts_a[i]], ps[pts_a[j]]) <= eps) {
                        local += 2;
                    }
                }
            }
            // Stencil cells later in key order; each unordered cell pair once.
            for (std::size_t code = 0; code < stencil_size; ++code) {
                std::size_t c = code;
                for (std::size_t k = 0; k < d; ++k) {
                    probe[k] = key_a[k] + static_cast<std::int64_t>(c % 3) - 1;
                    c /= 3;
                }
                const auto b = grid.find(probe);
                if (!b || *b <= a) {
                    continue;
                }
                const auto pts_b = grid.points(*b);
                for (std::uint32_t p : pts_a) {
                    const auto pp = ps[p];
                    for (std::uint32_t q : pts_b) {
                        if (distance(pp, ps[q]) <= eps) {
                            local += 2;
                        }
                    }
                }
            }
        }
        partial[w] += local;
    });
    std::uint64_t total = 0;
    for (auto v : partial) {
        total += v;
    }
    return total;
}

// Box tests in units of a cell side: cells whose keys differ by dk per
// axis have farthest corners (|dk| + 1) cells apart per axis and nearest
// points max(|dk| - 1, 0) cells apart. Comparing squared integer sums with
// squared thresholds avoids square roots; the slack absorbs the rounding.
struct BoxTest {
    double skip_below;  // span^2 below this: no pair can reach `far`
    double take_from;   // gap^2 at least this: every pair reaches `far`

    BoxTest(double far, double side)
        : skip_below(std::pow((far - kPruneSlack) / side, 2)),
          take_from(std::pow((far + kPruneSlack) / side, 2)) {}
};

enum class Verdict { skip, take, scan };

Verdict classify(std::span<const std::int64_t> a, std::span<const std::int64_t> b, const BoxTest& t,
                 bool same) {
    std::int64_t span_sq = 0;
    std::int64_t gap_sq = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const std::int64_t dk = a[k] > b[k] ? a[k] - b[k] : b[k] - a[k];
        span_sq += (dk + 1) * (dk + 1);
        gap_sq += dk > 1 ? (dk - 1) * (dk - 1) : 0;
    }
    if (static_cast<double>(span_sq) < t.skip_below) {
        return Verdict::skip;
    }
    if (!same && static_cast<double>(gap_sq) >= t.take_from) {
        return Verdict::take;
    }
    return Verdict::scan;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

// Fine cells grouped into blocks of `factor` cells per axis.
struct Blocks {
    std::int64_t factor = 1;
    std::vector<std::int64_t> keys;          // block keys, dim per block
    std::vector<std::size_t> start;          // CSR into cells
    std::vector<std::uint32_t> cells;        // fine cell indices
    std::vector<std::uint64_t> points;       // points per block

    std::size_t size() const { return start.size() - 1; }
};

Blocks make_blocks(const GridIndex& grid, std::int64_t factor) {
    const std::size_t d = grid.dim();
    const std::size_t c = grid.cell_count();
    std::vector<std::int64_t> bkey(c * d);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            bkey[i * d + k] = floor_div(grid.key(i)[k], factor);
        }
    }
    auto key_of = [&](std::size_t i) { return std::span<const std::int64_t>(bkey.data() + i * d, d); };
    std::vector<std::uint32_t> order(c);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        const auto kx = key_of(x);
        const auto ky = key_of(y);
        return std::lexicographical_compare(kx.begin(), kx.end(), ky.begin(), ky.end());
    });
    Blocks blocks;
    blocks.factor = factor;
    blocks.cells.reserve(c);
    for (std::size_t r = 0; r < c; ++r) {
        const auto k = key_of(order[r]);
        if (r == 0 || !std::equal(k.begin(), k.end(), key_of(order[r - 1]).begin())) {
            blocks.start.push_back(r);
            blocks.keys.insert(blocks.keys.end(), k.begin(), k.end());
            blocks.points.push_back(0);
        }
        blocks.cells.push_back(order[r]);
        blocks.points.back() += grid.occupancy(order[r]);
    }
    blocks.start.push_back(c);
    return blocks;
}

std::uint64_t count_antipodes_grid(const PointSet& ps, double eps, double far, unsigned threads) {
    double side = eps;
    GridIndex grid(ps, side);
    while (grid.cell_count() > kMaxAntipodeCells) {
        side *= 2.0;
        grid = GridIndex(ps, side);
    }
    const std::size_t d = ps.dim();
    std::int64_t factor = 1;
    Blocks blocks = make_blocks(grid, factor);
    const double block_target = std::max(16.0, 4.0 * std::sqrt(static_cast<double>(grid.cell_count())));
    while (static_cast<double>(blocks.size()) > block_target && factor < (std::int64_t{1} << 20)) {
        factor *= 2;
        blocks = make_blocks(grid, factor);
    }
    const BoxTest fine(far, side);
    const BoxTest coarse(far, side * static_cast<double>(factor));
    const std::size_t nb = blocks.size();
    std::vector<std::uint64_t> partial(detail::worker_slots(threads), 0);

    auto scan_cells = [&](std::size_t a, std::size_t b) {
        std::uint64_t found = 0;
        const auto pts_a = grid.points(a);
        if (a == b) {
            for (std::size_t i = 0; i < pts_a.size(); ++i) {
                for (std::size_t j = i + 1; j < pts_a.size(); ++j) {
                    if (distance(ps[pts_a[i]], ps[pts_a[j]]) >= far) {
                        found += 2;
                    }
                }
            }
            return found;
        }
        const auto pts_b = grid.points(b);
        for (std::uint32_t p : pts_a) {
            const auto pp = ps[p];
            for (std::uint32_t q : pts_b) {
                if (distance(pp, ps[q]) >= far) {
                    found += 2;
                }
            }
        }
        return found;
    };
    auto cell_pair = [&](std::size_t a, std::size_t b) -> std::uint64_t {
        switch (classify(grid.key(a), grid.key(b), fine, a == b)) {
            case Verdict::skip:
                return 0;
            case Verdict::take:
                return 2ull * grid.occupancy(a) * grid.occupancy(b);
            case Verdict::scan:
                break;
        }
        return scan_cells(a, b);
    };

    detail::parallel_chunks(nb, threads, 4, [&](std::size_t begin, std::size_t end, unsigned w) {
        std::uint64_t local = 0;
        for (std::size_t A = begin; A < end; ++A) {
            const std::span<const std::int64_t> key_A(blocks.keys.data() + A * d, d);
            const auto first_A = blocks.cells.begin() + static_cast<std::ptrdiff_t>(blocks.start[A]);
            const auto last_A = blocks.cells.begin() + static_cast<std::ptrdiff_t>(blocks.start[A + 1]);
            for (std::size_t B = A; B < nb; ++B) {
                const std::span<const std::int64_t> key_B(blocks.keys.data() + B * d, d);
                const Verdict v = classify(key_A, key_B, coarse, A == B);
                if (v == Verdict::skip) {
                    continue;
                }
                if (v == Verdict::take) {
                    local += 2ull * blocks.points[A] * blocks.points[B];
                    continue;
                }
                const auto first_B = blocks.cells.begin() + static_cast<std::ptrdiff_t>(blocks.start[B]);
                const auto last_B = blocks.cells.begin() + static_cast<std::ptrdiff_t>(blocks.start[B + 1]);
                if (A == B) {
                    for (auto i = first_A; i != last_A; ++i) {
                        for (auto j = i; j != last_A; ++j) {
                            local += cell_pair(*i, *j);
                        }
                    }
                } else {
                    for (auto i = first_A; i != last_A; ++i) {
                        for (auto j = first_B; j != last_B; ++j) {
                            local += cell_pair(*i, *j);
                        }
                    }
                }
            }
        }
        partial[w] += local;
    });
    std::uint64_t total = 0;
    for (auto v : partial) {
        total += v;
    }
    return total;
}

}  // namespace

void require_unit_diameter(const PointSet& ps) {
    const double diam = ps.diameter();
    if (diam > 1.0 + kDiameterTolerance) {
        throw ContractError("point set diameter " + std::to_string(diam) +
                            " exceeds 1; normalize the set before counting");
    }
}

PairCounts count_pairs_brute(const PointSet& ps, const Epsilon& eps, const CountOptions& opts) {
    require_unit_diameter(ps);
    const double near = eps.value();
    const double far = eps.far_threshold();
    const std::size_t n = ps.size();
    std::vector<Tally> partial(detail::worker_slots(opts.threads));

    detail::parallel_chunks(n, opts.threads, 64, [&](std::size_t begin, std::size_t end, unsigned w) {
        Tally local;
        for (std::size_t i = begin; i < end; ++i) {
            const auto p = ps[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dist = distance(p, ps[j]);
                local.neighbors += dist <= near ? 2 : 0;
                local.antipodes += dist >= far ? 2 : 0;
            }
        }
        partial[w].neighbors += local.neighbors;
        partial[w].antipodes += local.antipodes;
    });

    PairCounts out{n, 0, near, n};
    for (const auto& t : partial) {
        out.neighbors_ordered += t.neighbors;
        out.antipodes_ordered += t.antipodes;
    }
    return out;
}

PairCounts count_pairs_grid(const PointSet& ps, const Epsilon& eps, const CountOptions& opts) {
    require_unit_diameter(ps);
    PairCounts out;
    out.n = ps.size();
    out.epsilon = eps.value();
    out.neighbors_ordered = count_neighbors_grid(ps, eps.value(), opts.threads);
    out.antipodes_ordered = count_antipodes_grid(ps, eps.value(), eps.far_threshold(), opts.threads);
    return out;
}

PairCounts count_pairs_metric(const FiniteMetric& m, double near, double far) {
    if (!(near > 0.0) || !(near < far) || far > m.diameter()) {
        throw InputError("metric thresholds must satisfy 0 < near < far <= diameter");
    }
    PairCounts out;
    out.n = m.size();
    out.epsilon = near;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            const double dist = m(i, j);
            out.neighbors_ordered += dist <= near ? 1 : 0;
            out.antipodes_ordered += dist >= far ? 1 : 0;
        }
    }
    return out;
}

PigeonholeBound pigeonhole_lower_bound(const PointSet& ps, const Epsilon& eps) {
    require_unit_diameter(ps);
    const GridIndex grid(ps, eps.value() / 4.0);
    PigeonholeBound out;
    out.k_cover = grid.cell_count();
    for (std::size_t c = 0; c < grid.cell_count(); ++c) {
        const std::uint64_t occ = grid.occupancy(c);
        out.sum_squares += occ * occ;
    }
    const std::uint64_t n = ps.size();
    out.bound = (n * n + out.k_cover - 1) / out.k_cover;
    return out;
}

}  // namespace antipodes

#include "antipodes/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "antipodes/errors.hpp"
#include "antipodes/grid.hpp"
#include "antipodes/point_io.hpp"
#include "antipodes/regression.hpp"
#include "parallel.hpp"

namespace antipodes {

BoxGraph::BoxGraph(const BoxPartition& bp, const AntipodalityMatrix& m)
    : cell_side_(bp.cell_side), keys_(bp.keys), adjacency_(bp.k()) {
    if (bp.dim != 2) {
        throw InputError("box graphs are planar");
    }
    if (m.size() != bp.k()) {
        throw InputError("matrix size does not match the partition");
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::uint32_t j : m.row(i)) {
            if (j != i) {
                adjacency_[i].push_back(j);
                edges_ += j > i ? 1 : 0;
            }
        }
    }
}

BoxGraph::BoxGraph(double cell_side, std::vector<std::int64_t> keys,
                   std::span<const std::pair<std::uint32_t, std::uint32_t>> edges)
    : cell_side_(cell_side), keys_(std::move(keys)) {
    if (!(cell_side > 0.0) || !std::isfinite(cell_side)) {
        throw InputError("cell side must be positive");
    }
    if (keys_.size() % 2 != 0) {
        throw InputError("cell coordinates come in pairs");
    }
    const std::size_t k = keys_.size() / 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> loopless;
    for (const auto& e : edges) {
        if (e.first != e.second) {
            loopless.push_back(e);
        }
    }
    const AntipodalityMatrix m(k, loopless);
    adjacency_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto r = m.row(i);
        adjacency_[i].assign(r.begin(), r.end());
        edges_ += r.size();
    }
    edges_ /= 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BoxGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edges_);
    for (std::size_t i = 0; i < k(); ++i) {
        for (std::uint32_t j : adjacency_[i]) {
            if (j > i) {
                out.emplace_back(static_cast<std::uint32_t>(i), j);
            }
        }
    }
    return out;
}

void write_edge_list(std::ostream& out, const BoxGraph& g) {
    out << "k " << g.k() << " edges " << g.edge_count() << " cell_side "
        << format_double(g.cell_side()) << '\n';
    for (std::size_t v = 0; v < g.k(); ++v) {
        out << g.key(v)[0] << ' ' << g.key(v)[1] << '\n';
    }
    for (const auto& [i, j] : g.edges()) {
        out << i << ' ' << j << '\n';
    }
}

namespace {

[[noreturn]] void edge_fail(std::size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_token(std::istringstream& ls, std::size_t line, const char* what) {
    std::string token;
    if (!(ls >> token)) {
        edge_fail(line, std::string("missing ") + what);
    }
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        edge_fail(line, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

void expect_word(std::istringstream& ls, std::size_t line, const char* word) {
    std::string token;
    if (!(ls >> token) || token != word) {
        edge_fail(line, std::string("header must read 'k <k> edges <m> cell_side <s>'"));
    }
}

void expect_end(std::istringstream& ls, std::size_t line) {
    std::string extra;
    if (ls >> extra) {
        edge_fail(line, "unexpected trailing token '" + extra + "'");
    }
}

}  // namespace

BoxGraph read_edge_list(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    auto next_line = [&](std::istringstream& ls) {
        while (std::getline(in, text)) {
            ++line_no;
            const auto first = text.find_first_not_of(" \t\r");
            if (first == std::string::npos || text[first] == '#') {
                continue;
            }
            ls = std::istringstream(text);
            return true;
        }
        return false;
    };
    std::istringstream ls;
    if (!next_line(ls)) {
        throw InputError("empty edge list");
    }
    expect_word(ls, line_no, "k");
    const auto k = parse_token<std::size_t>(ls, line_no, "box count");
    expect_word(ls, line_no, "edges");
    const auto m = parse_token<std::size_t>(ls, line_no, "edge count");
    expect_word(ls, line_no, "cell_side");
    const auto side = parse_token<double>(ls, line_no, "cell side");
    expect_end(ls, line_no);

    std::vector<std::int64_t> keys;
    keys.reserve(2 * k);
    for (std::size_t v = 0; v < k; ++v) {
        if (!next_line(ls)) {
            throw InputError("edge list ends after " + std::to_string(v) + " of " +
                             std::to_string(k) + " cells");
        }
        keys.push_back(parse_token<std::int64_t>(ls, line_no, "integer cell coordinate"));
        keys.push_back(parse_token<std::int64_t>(ls, line_no, "integer cell coordinate"));
        expect_end(ls, line_no);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        if (!next_line(ls)) {
            throw InputError("edge list ends after " + std::to_string(e) + " of " +
                             std::to_string(m) + " edges");
        }
        const auto i = parse_token<std::uint32_t>(ls, line_no, "cell index");
        const auto j = parse_token<std::uint32_t>(ls, line_no, "cell index");
        expect_end(ls, line_no);
        if (i >= k || j >= k) {
            edge_fail(line_no, "cell index out of range");
        }
        edges.emplace_back(i, j);
    }
    if (next_line(ls)) {
        edge_fail(line_no, "more edges than the header declares");
    }
    return BoxGraph(side, std::move(keys), edges);
}

BoxGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

NeighborProfile common_neighbor_profile(const BoxGraph& g, double forbidden_radius, unsigned threads) {
    if (!(forbidden_radius >= 0.0) || !std::isfinite(forbidden_radius)) {
        throw InputError("forbidden radius must be finite and non-negative");
    }
    const std::size_t k = g.k();
    NeighborProfile profile;
    profile.forbidden_radius = forbidden_radius;
    for (std::size_t s = 1; s <= std::max<std::size_t>(k, 1); s *= 2) {
        profile.rows.push_back({s, 0});
    }
    if (k == 0) {
        return profile;
    }
    const std::size_t levels = profile.rows.size();
    const unsigned slots = detail::worker_slots(threads);
    // Per-worker maxima; max is order independent.
    std::vector<std::vector<std::size_t>> best(slots, std::vector<std::size_t>(levels, 0));
    std::vector<std::size_t> best_forbidden(slots, 0);

    detail::parallel_chunks(k, slots, 16, [&](std::size_t begin, std::size_t end, unsigned w) {
        std::vector<std::uint32_t> common(k, 0);
        std::vector<char> forbidden(k, 0);
        std::vector<std::uint32_t> touched;
        std::vector<std::size_t> at_least(levels, 0);
        for (std::size_t v = begin; v < end; ++v) {
            std::size_t forbidden_count = 0;
            for (std::size_t u = 0; u < k; ++u) {
                if (box_min_distance(g.key(v), g.key(u), g.cell_side()) <= forbidden_radius) {
                    forbidden[u] = 1;
                    ++forbidden_count;
                }
            }
            best_forbidden[w] = std::max(best_forbidden[w], forbidden_count);
            for (std::uint32_t u : g.neighbors(v)) {
                for (std::uint32_t x : g.neighbors(u)) {
                    if (common[x]++ == 0) {
                        touched.push_back(x);
                    }
                }
            }
            std::fill(at_least.begin(), at_least.end(), 0);
            for (std::uint32_t x : touched) {
                if (!forbidden[x]) {
                    for (std::size_t l = 0; l < levels && profile.rows[l].s <= common[x]; ++l) {
                        ++at_least[l];
                    }
                }
                common[x] = 0;
            }
            touched.clear();
            for (std::size_t l = 0; l < levels; ++l) {
                best[w][l] = std::max(best[w][l], at_least[l]);
            }
            std::fill(forbidden.begin(), forbidden.end(), 0);
        }
    });

    for (unsigned w = 0; w < slots; ++w) {
        profile.max_forbidden = std::max(profile.max_forbidden, best_forbidden[w]);
        for (std::size_t l = 0; l < levels; ++l) {
            profile.rows[l].count = std::max(profile.rows[l].count, best[w][l]);
        }
    }
    profile.c_forbidden = static_cast<double>(profile.max_forbidden) / std::sqrt(static_cast<double>(k));
    for (const auto& row : profile.rows) {
        profile.c_emp = std::max(profile.c_emp, static_cast<double>(row.s) *
                                                    static_cast<double>(row.count) /
                                                    static_cast<double>(k));
    }
    return profile;
}

EdgeGrowth edge_growth_check(std::span<const std::pair<std::size_t, std::size_t>> samples) {
    if (samples.size() < 4) {
        throw InputError("edge growth fit needs at least 4 samples, got " +
                         std::to_string(samples.size()));
    }
    std::vector<std::size_t> ks;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> y_corrected;
    for (const auto& [k, e] : samples) {
        if (k < 2 || e < 1) {
            throw InputError("edge growth samples need k >= 2 and at least one edge");
        }
        ks.push_back(k);
        const double lk = std::log(static_cast<double>(k));
        x.push_back(lk);
        y.push_back(std::log(static_cast<double>(e)));
        y_corrected.push_back(y.back() - 0.5 * std::log(lk));
    }
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end()) {
        throw InputError("edge growth samples need distinct k");
    }
    const LinearFit raw = least_squares(x, y);
    const LinearFit corrected = least_squares(x, y_corrected);
    return {raw.slope, raw.intercept, raw.r_squared, corrected.slope, corrected.intercept,
            corrected.r_squared};
}

}  // namespace antipodes

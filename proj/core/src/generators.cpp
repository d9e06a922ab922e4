#include "antipodes/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "antipodes/errors.hpp"

namespace antipodes {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenAngle = kPi * (3.0 - 2.2360679774997896964);  // pi (3 - sqrt 5)
constexpr double kCapAngle = kPi / 6.0;

double frac(double x) { return x - std::floor(x); }

// cos/sin of 2 pi i / n with exact values at quarter turns.
std::pair<double, double> unit_angle(std::size_t i, std::size_t n) {
    if ((4 * i) % n == 0) {
        switch ((4 * i) / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    return {std::cos(t), std::sin(t)};
}

// Sunflower placement of m points in the wedge [a0, a0 + width] of radius r.
void sunflower_wedge(std::vector<double>& out, double cx, double cy, std::size_t m, double radius,
                     double a0, double width) {
    for (std::size_t t = 0; t < m; ++t) {
        const double r = radius * std::sqrt((static_cast<double>(t) + 0.5) / static_cast<double>(m));
        const double a = a0 + width * frac(static_cast<double>(t) * 0.6180339887498949);
        out.push_back(cx + r * std::cos(a));
        out.push_back(cy + r * std::sin(a));
    }
}

void require_eps(const GeneratorSpec& spec) {
    if (!spec.epsilon) {
        throw InputError(std::string("family '") + std::string(family_name(spec.family)) +
                         "' needs an epsilon");
    }
}

// Unit vector within angle `max_angle` of e_0 in R^d, area-uniform on that
// cap (rejection on the polar angle).
std::vector<double> cap_direction(std::mt19937_64& rng, std::size_t d, double max_angle) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double smax = std::sin(max_angle);
    double phi = 0.0;
    for (;;) {
        phi = max_angle * unit(rng);
        const double accept = std::pow(std::sin(phi) / smax, static_cast<double>(d - 2));
        if (unit(rng) <= accept) {
            break;
        }
    }
    std::vector<double> tangent(d - 1);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& v : tangent) {
            v = normal(rng);
            norm += v * v;
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    std::vector<double> dir(d);
    dir[0] = std::cos(phi);
    for (std::size_t i = 1; i < d; ++i) {
        dir[i] = std::sin(phi) * tangent[i - 1] / norm;
    }
    return dir;
}

double min_separation(const std::vector<double>& pts, std::size_t d) {
    const std::size_t n = pts.size() / d;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            best = std::min(best, distance(std::span(pts).subspan(i * d, d),
                                           std::span(pts).subspan(j * d, d)));
        }
    }
    return best;
}

void project_to_sphere(std::span<double> p, double radius) {
    double norm = 0.0;
    for (double v : p) {
        norm += v * v;
    }
    norm = std::sqrt(norm);
    for (double& v : p) {
        v = radius * v / norm;
    }
}

// Nearest-neighbour repulsion on the sphere of radius 1/2, run until the
// separation bound holds and then for a fixed number of polishing sweeps.
std::vector<double> repulsion_sphere(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> pts(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            pts[i * d + k] = normal(rng);
        }
        project_to_sphere(std::span(pts).subspan(i * d, d), 0.5);
    }
    const double target = sphere_min_separation_bound(n, d);
    constexpr std::size_t kPolish = 30;
    constexpr std::size_t kMaxSweeps = 2000;
    std::size_t polished = 0;
    std::vector<double> next(pts.size());
    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (min_separation(pts, d) >= target) {
            if (++polished > kPolish) {
                return pts;
            }
        }
        const double step = 0.5 / (1.0 + 0.05 * static_cast<double>(sweep));
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = std::span<const double>(pts).subspan(i * d, d);
            std::size_t nearest = i;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) {
                    continue;
                }
                const double dist = distance(p, std::span<const double>(pts).subspan(j * d, d));
                if (dist < best) {
                    best = dist;
                    nearest = j;
                }
            }
            auto q = std::span(next).subspan(i * d, d);
            for (std::size_t k = 0; k < d; ++k) {
                const double away = best > 0.0 ? (p[k] - pts[nearest * d + k]) / best : normal(rng);
                q[k] = p[k] + step * target * away;
            }
            project_to_sphere(q, 0.5);
        }
        pts.swap(next);
    }
    if (min_separation(pts, d) < target) {
        throw InputError("sphere repulsion did not reach the separation bound for n=" +
                         std::to_string(n) + ", d=" + std::to_string(d));
    }
    return pts;
}

}  // namespace

Family parse_family(std::string_view name) {
    static constexpr std::pair<std::string_view, Family> kNames[] = {
        {"circle", Family::circle},
        {"reuleaux", Family::reuleaux},
        {"polygon", Family::polygon},
        {"sphere_d", Family::sphere_d},
        {"sphere", Family::sphere_d},
        {"origin_plus_cap", Family::origin_plus_cap},
        {"two_clusters", Family::two_clusters},
        {"random_disk", Family::random_disk},
    };
    for (const auto& [n, f] : kNames) {
        if (n == name) {
            return f;
        }
    }
    throw InputError("unknown generator family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::circle: return "circle";
        case Family::reuleaux: return "reuleaux";
        case Family::polygon: return "polygon";
        case Family::sphere_d: return "sphere_d";
        case Family::origin_plus_cap: return "origin_plus_cap";
        case Family::two_clusters: return "two_clusters";
        case Family::random_disk: return "random_disk";
    }
    return "unknown";
}

bool family_uses_epsilon(Family f) noexcept {
    return f == Family::reuleaux || f == Family::origin_plus_cap || f == Family::two_clusters;
}

PointSet generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::circle:
            return gen_circle(spec.n);
        case Family::polygon: {
            std::size_t k = spec.k;
            if (k == 0) {
                require_eps(spec);
                k = polygon_sides_for(Epsilon(*spec.epsilon));
            }
            return gen_polygon(spec.n, k);
        }
        case Family::reuleaux:
            require_eps(spec);
            return gen_reuleaux(spec.n, Epsilon(*spec.epsilon), spec.vertex_scale);
        case Family::sphere_d:
            return gen_sphere_d(spec.n, spec.d, spec.seed);
        case Family::origin_plus_cap:
            require_eps(spec);
            return gen_origin_plus_cap(spec.n, spec.d, Epsilon(*spec.epsilon), spec.seed);
        case Family::two_clusters:
            require_eps(spec);
            return gen_two_clusters(spec.n, Epsilon(*spec.epsilon));
        case Family::random_disk:
            return gen_random_disk(spec.n, spec.seed);
    }
    throw InputError("unknown generator family");
}

PointSet gen_circle(std::size_t n) {
    if (n < 3) {
        throw InputError("circle needs n >= 3");
    }
    std::vector<double> pts(2 * n);
    const bool even = n % 2 == 0;
    const std::size_t first = even ? n / 2 : n;
    for (std::size_t i = 0; i < first; ++i) {
        const auto [c, s] = unit_angle(i, n);
        pts[2 * i] = 0.5 * c;
        pts[2 * i + 1] = 0.5 * s;
    }
    // Opposite samples are exact negations.
    for (std::size_t i = first; i < n; ++i) {
        pts[2 * i] = -pts[2 * (i - first)];
        pts[2 * i + 1] = -pts[2 * (i - first) + 1];
    }
    return PointSet(2, std::move(pts));
}

double polygon_apothem(std::size_t k) { return 0.5 * std::cos(kPi / static_cast<double>(k)); }

std::size_t polygon_sides_for(const Epsilon& eps) {
    const double ideal = kPi / std::sqrt(2.0 * eps.value());
    auto k = std::max<std::size_t>(4, static_cast<std::size_t>(2.0 * std::round(ideal / 2.0)));
    // Opposite sides must be fully antipodal: 2a = cos(pi/k) >= 1 - eps.
    while (std::cos(kPi / static_cast<double>(k)) < eps.far_threshold()) {
        k += 2;
    }
    return k;
}

PointSet gen_polygon(std::size_t n, std::size_t k) {
    if (k < 4 || k % 2 != 0) {
        throw InputError("polygon side count must be even and at least 4, got " + std::to_string(k));
    }
    if (n < k) {
        throw InputError("polygon needs n >= k");
    }
    std::vector<double> vx(k);
    std::vector<double> vy(k);
    for (std::size_t j = 0; j < k / 2; ++j) {
        const auto [c, s] = unit_angle(j, k);
        vx[j] = 0.5 * c;
        vy[j] = 0.5 * s;
        vx[j + k / 2] = -vx[j];
        vy[j + k / 2] = -vy[j];
    }
    std::vector<double> pts;
    pts.reserve(2 * n);
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t m = base + (j < extra ? 1 : 0);
        const std::size_t next = (j + 1) % k;
        for (std::size_t t = 0; t < m; ++t) {
            const double u = static_cast<double>(t) / static_cast<double>(m);
            pts.push_back(t == 0 ? vx[j] : vx[j] + u * (vx[next] - vx[j]));
            pts.push_back(t == 0 ? vy[j] : vy[j] + u * (vy[next] - vy[j]));
        }
    }
    return PointSet(2, std::move(pts));
}

std::size_t reuleaux_vertex_count(std::size_t n, const Epsilon& eps, double vertex_scale) {
    return static_cast<std::size_t>(
        std::ceil(vertex_scale * std::sqrt(eps.value()) * static_cast<double>(n)));
}

PointSet gen_reuleaux(std::size_t n, const Epsilon& eps, double vertex_scale) {
    if (n < 30) {
        throw InputError("reuleaux needs n >= 30");
    }
    if (!(vertex_scale > 0.0)) {
        throw InputError("reuleaux vertex scale must be positive");
    }
    const std::size_t m = reuleaux_vertex_count(n, eps, vertex_scale);
    if (3 * m >= n) {
        throw InputError("reuleaux: n too small for the vertex clusters at this epsilon");
    }
    const double h = std::sqrt(3.0) / 2.0;
    const double vx[3] = {0.0, 1.0, 0.5};
    const double vy[3] = {0.0, 0.0, h};
    // Interior wedge at each vertex and the arc centred on it.
    const double wedge[3] = {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0};
    const double jitter = eps.value() / 100.0;

    std::vector<double> pts;
    pts.reserve(2 * n);
    for (int v = 0; v < 3; ++v) {
        sunflower_wedge(pts, vx[v], vy[v], m, jitter, wedge[v], kPi / 3.0);
    }
    const std::size_t rest = n - 3 * m;
    for (std::size_t a = 0; a < 3; ++a) {
        const std::size_t count = rest / 3 + (a < rest % 3 ? 1 : 0);
        for (std::size_t t = 0; t < count; ++t) {
            const double ang =
                wedge[a] + (kPi / 3.0) * (static_cast<double>(t) + 0.5) / static_cast<double>(count);
            pts.push_back(vx[a] + std::cos(ang));
            pts.push_back(vy[a] + std::sin(ang));
        }
    }
    return PointSet(2, std::move(pts));
}

double sphere_min_separation_bound(std::size_t n, std::size_t d) {
    return 0.25 * std::pow(static_cast<double>(n), -1.0 / static_cast<double>(d - 1));
}

PointSet gen_sphere_d(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (d < 2) {
        throw InputError("sphere needs d >= 2");
    }
    if (n < 10) {
        throw InputError("sphere needs n >= 10");
    }
    if (d == 2) {
        return gen_circle(n);
    }
    if (d == 3) {
        std::vector<double> pts(3 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double a = kGoldenAngle * static_cast<double>(i);
            pts[3 * i] = 0.5 * r * std::cos(a);
            pts[3 * i + 1] = 0.5 * r * std::sin(a);
            pts[3 * i + 2] = 0.5 * z;
        }
        return PointSet(3, std::move(pts));
    }
    return PointSet(d, repulsion_sphere(n, d, seed));
}

std::size_t origin_cluster_count(std::size_t n, std::size_t d, const Epsilon& eps) {
    const double delta = std::pow(eps.value(), (static_cast<double>(d) - 1.0) / 2.0);
    return static_cast<std::size_t>(std::ceil(delta * static_cast<double>(n)));
}

PointSet gen_origin_plus_cap(std::size_t n, std::size_t d, const Epsilon& eps, std::uint64_t seed) {
    if (d < 2) {
        throw InputError("origin_plus_cap needs d >= 2");
    }
    if (n < 2) {
        throw InputError("origin_plus_cap needs n >= 2");
    }
    const std::size_t m = origin_cluster_count(n, d, eps);
    const double jitter = eps.value() / 100.0;
    std::mt19937_64 rng(seed);
    std::vector<double> pts;
    pts.reserve((n + m) * d);

    // Origin cluster, jittered towards the cap so every cap point stays
    // within distance 1.
    if (d == 2) {
        sunflower_wedge(pts, 0.0, 0.0, m, jitter, -kCapAngle, 2.0 * kCapAngle);
    } else {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::size_t t = 0; t < m; ++t) {
            const auto dir = cap_direction(rng, d, kCapAngle);
            const double r = jitter * std::pow(unit(rng), 1.0 / static_cast<double>(d));
            for (double v : dir) {
                pts.push_back(r * v);
            }
        }
    }

    if (d == 2) {
        for (std::size_t j = 0; j < n; ++j) {
            const double a =
                -kCapAngle + 2.0 * kCapAngle * static_cast<double>(j) / static_cast<double>(n - 1);
            pts.push_back(std::cos(a));
            pts.push_back(std::sin(a));
        }
    } else if (d == 3) {
        const double zmin = std::cos(kCapAngle);
        for (std::size_t j = 0; j < n; ++j) {
            const double z =
                1.0 - (1.0 - zmin) * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double a = kGoldenAngle * static_cast<double>(j);
            pts.push_back(z);
            pts.push_back(r * std::cos(a));
            pts.push_back(r * std::sin(a));
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            const auto dir = cap_direction(rng, d, kCapAngle);
            pts.insert(pts.end(), dir.begin(), dir.end());
        }
    }
    return PointSet(d, std::move(pts));
}

PointSet gen_two_clusters(std::size_t n, const Epsilon& eps) {
    if (n < 2) {
        throw InputError("two_clusters needs n >= 2");
    }
    const double e = eps.value();
    const double half_gap = (1.0 - e / 2.0) / 2.0;
    std::vector<double> pts;
    pts.reserve(2 * n);
    sunflower_wedge(pts, -half_gap, 0.0, n / 2, e / 20.0, 0.0, 2.0 * kPi);
    sunflower_wedge(pts, half_gap, 0.0, n - n / 2, e / 20.0, 0.0, 2.0 * kPi);
    return PointSet(2, std::move(pts));
}

PointSet gen_random_disk(std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw InputError("random_disk needs n >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> pts(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = 0.5 * std::sqrt(unit(rng));
        const double a = 2.0 * kPi * unit(rng);
        pts[2 * i] = r * std::cos(a);
        pts[2 * i + 1] = r * std::sin(a);
    }
    return PointSet(2, std::move(pts));
}

FiniteMetric star_metric(std::size_t n) {
    if (n < 2) {
        throw InputError("star metric needs n >= 2");
    }
    std::vector<double> table(n * n, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
        table[i * n + i] = 0.0;
        if (i > 0) {
            table[i] = 1.0;
            table[i * n] = 1.0;
        }
    }
    return FiniteMetric(n, std::move(table));
}

}  // namespace antipodes

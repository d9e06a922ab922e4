#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <unistd.h>

namespace antipodes::testing {

NaiveCounts naive_counts(const PointSet& ps, double eps) {
    NaiveCounts c;
    const double far = 1.0 - eps;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            double sum = 0.0;
            for (std::size_t a = 0; a < ps.dim(); ++a) {
                const double diff = ps[i][a] - ps[j][a];
                sum += diff * diff;
            }
            const double dist = std::sqrt(sum);
            if (dist <= eps) ++c.neighbors;
            if (dist >= far) ++c.antipodes;
        }
    }
    return c;
}

PointSet random_instance(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int shape = static_cast<int>(rng() % 3);
    std::vector<double> centers(4 * d);
    for (auto& c : centers) c = g(rng);
    std::vector<double> coords(n * d);
    std::vector<double> v(d);
    for (std::size_t i = 0; i < n; ++i) {
        double norm = 0.0;
        for (auto& c : v) {
            c = g(rng);
            norm += c * c;
        }
        norm = std::sqrt(norm);
        double r = 1.0;
        if (shape == 0) r = std::pow(u(rng), 1.0 / static_cast<double>(d));
        if (shape == 1) r = 1.0 - 0.05 * u(rng);
        if (shape == 2) r = 0.05 * u(rng);
        for (std::size_t a = 0; a < d; ++a) {
            coords[i * d + a] = r * v[a] / norm + (shape == 2 ? centers[(i % 4) * d + a] : 0.0);
        }
    }
    PointSet ps(d, std::move(coords));
    return n >= 2 ? normalize_to_unit_diameter(ps) : ps;
}

std::vector<std::size_t> naive_hull_vertices(const PointSet& ps) {
    const std::size_t n = ps.size();
    auto orient = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (ps[a][0] - ps[o][0]) * (ps[b][1] - ps[o][1]) -
               (ps[a][1] - ps[o][1]) * (ps[b][0] - ps[o][0]);
    };
    auto same = [&](std::size_t a, std::size_t b) { return ps[a][0] == ps[b][0] && ps[a][1] == ps[b][1]; };
    auto between = [&](std::size_t p, std::size_t a, std::size_t b) {
        return std::min(ps[a][0], ps[b][0]) <= ps[p][0] && ps[p][0] <= std::max(ps[a][0], ps[b][0]) &&
               std::min(ps[a][1], ps[b][1]) <= ps[p][1] && ps[p][1] <= std::max(ps[a][1], ps[b][1]);
    };
    std::vector<bool> vertex(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (same(i, j)) continue;
            bool edge = true;
            for (std::size_t m = 0; m < n && edge; ++m) {
                const double o = orient(i, j, m);
                if (o < 0.0) edge = false;
                if (o == 0.0 && !between(m, i, j)) edge = false;
            }
            if (edge) {
                vertex[i] = true;
                vertex[j] = true;
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!vertex[i]) continue;
        bool duplicate = false;
        for (std::size_t j = 0; j < i && !duplicate; ++j) duplicate = vertex[j] && same(i, j);
        if (!duplicate) out.push_back(i);
    }
    if (out.empty()) out.push_back(0);
    return out;
}

double dense_top_eigenvalue(const AntipodalityMatrix& m) {
    const auto k = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (const auto j : m.row(static_cast<std::size_t>(i))) a(i, j) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

std::vector<XY> circle_circle(XY a, double ar, XY b, double br) {
    auto f = [&](double t) {
        const double x = a.x + ar * std::cos(t) - b.x;
        const double y = a.y + ar * std::sin(t) - b.y;
        return x * x + y * y - br * br;
    };
    auto df = [&](double t) {
        const double x = a.x + ar * std::cos(t) - b.x;
        const double y = a.y + ar * std::sin(t) - b.y;
        return 2.0 * (-x * ar * std::sin(t) + y * ar * std::cos(t));
    };
    constexpr int kSteps = 20000;
    const double h = 2.0 * std::numbers::pi / kSteps;
    std::vector<XY> out;
    for (int s = 0; s < kSteps; ++s) {
        double lo = s * h;
        double hi = lo + h;
        if (std::signbit(f(lo)) == std::signbit(f(hi)) && f(lo) != 0.0) continue;
        // Bisection to bracket, then Newton polish.
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::signbit(f(mid)) == std::signbit(f(lo))) lo = mid;
            else hi = mid;
        }
        double t = 0.5 * (lo + hi);
        for (int it = 0; it < 5; ++it) {
            const double d = df(t);
            if (d == 0.0) break;
            t -= f(t) / d;
        }
        out.push_back({a.x + ar * std::cos(t), a.y + ar * std::sin(t)});
    }
    std::sort(out.begin(), out.end(), [](const XY& p, const XY& q) { return p.y < q.y; });
    return out;
}

TempDir::TempDir() {
    static std::atomic<int> counter{0};
    root_ = std::filesystem::temp_directory_path() /
            ("antipodes-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(root_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(root_, ec);
}

}  // namespace antipodes::testing

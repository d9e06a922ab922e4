#include <antipodes/generators.hpp>
#include <antipodes/hull.hpp>
#include <antipodes/pipeline.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace antipodes {
namespace {

std::set<std::pair<double, double>> vertex_set(const ConvexHull& h) {
    std::set<std::pair<double, double>> out;
    for (const auto& v : h.vertices()) out.emplace(v.x, v.y);
    return out;
}

std::set<std::pair<double, double>> oracle_set(const PointSet& ps) {
    std::set<std::pair<double, double>> out;
    for (auto i : testing::naive_hull_vertices(ps)) out.emplace(ps[i][0], ps[i][1]);
    return out;
}

bool strictly_convex_ccw(const ConvexHull& h) {
    const auto& v = h.vertices();
    if (v.size() < 3) return true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) <= 0.0) return false;
    }
    return true;
}

TEST(Hull, SquareWithCenter) {
    const PointSet ps({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}, Point{0.5, 0.5}});
    const ConvexHull h = convex_hull(ps);
    EXPECT_EQ(h.size(), 4u);
    EXPECT_EQ(vertex_set(h).count({0.5, 0.5}), 0u);
    EXPECT_TRUE(strictly_convex_ccw(h));
}

TEST(Hull, CircleIsInConvexPosition) {
    const ConvexHull h = convex_hull(gen_circle(100));
    EXPECT_EQ(h.size(), 100u);
    EXPECT_TRUE(strictly_convex_ccw(h));
}

TEST(Hull, MatchesNaiveOracle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int t = 0; t < 5; ++t) {
        std::vector<double> coords;
        for (int i = 0; i < 1000; ++i) {
            coords.push_back(u(rng));
            coords.push_back(u(rng));
        }
        const PointSet ps(2, coords);
        const ConvexHull h = convex_hull(ps);
        EXPECT_EQ(vertex_set(h), oracle_set(ps));
        EXPECT_TRUE(strictly_convex_ccw(h));
        for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_TRUE(h.contains({ps[i][0], ps[i][1]}, 1e-15));
    }
}

TEST(Hull, CollinearAndRepeatedPoints) {
    const PointSet grid(2, {0, 0, 1, 0, 2, 0, 2, 1, 2, 2, 1, 2, 0, 2, 0, 1, 1, 1, 0, 0, 2, 2});
    const ConvexHull h = convex_hull(grid);
    EXPECT_EQ(vertex_set(h), (std::set<std::pair<double, double>>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    EXPECT_EQ(vertex_set(h), oracle_set(grid));

    const ConvexHull segment = convex_hull(PointSet(2, {0, 0, 0.3, 0.3, 1, 1, 0.5, 0.5}));
    EXPECT_EQ(segment.size(), 2u);
    EXPECT_EQ(segment.boundary_distance({0.5, 0.5}), 0.0);

    const ConvexHull point = convex_hull(PointSet(2, {0.2, 0.1, 0.2, 0.1}));
    EXPECT_EQ(point.size(), 1u);
    EXPECT_DOUBLE_EQ(point.boundary_distance({0.2, 0.4}), 0.3);
}

TEST(Hull, SourceIndicesPointAtVertices) {
    const PointSet ps = gen_random_disk(500, 2);
    const ConvexHull h = convex_hull(ps);
    ASSERT_EQ(h.source_indices().size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        EXPECT_EQ(ps[h.source_indices()[i]][0], h.vertices()[i].x);
        EXPECT_EQ(ps[h.source_indices()[i]][1], h.vertices()[i].y);
    }
}

TEST(Hull, DiameterOfHullEqualsDiameterOfSet) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PointSet ps = gen_random_disk(800, seed);
        const ConvexHull h = convex_hull(ps);
        std::vector<double> coords;
        for (const auto& v : h.vertices()) {
            coords.push_back(v.x);
            coords.push_back(v.y);
        }
        EXPECT_EQ(PointSet(2, coords).diameter(), ps.diameter());
    }
}

TEST(Hull, BoundaryDistance) {
    const ConvexHull h = convex_hull(PointSet({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}}));
    EXPECT_DOUBLE_EQ(h.boundary_distance({0.5, 0.5}), 0.5);
    EXPECT_DOUBLE_EQ(h.boundary_distance({0.1, 0.5}), 0.1);
    EXPECT_DOUBLE_EQ(h.boundary_distance({2.0, 0.5}), 1.0);
    EXPECT_TRUE(h.within_boundary_distance({0.1, 0.5}, 0.1));
    EXPECT_FALSE(h.within_boundary_distance({0.5, 0.5}, 0.4));
    EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
}

}  // namespace
}  // namespace antipodes

#include <antipodes/errors.hpp>
#include <antipodes/finite_metric.hpp>
#include <antipodes/generators.hpp>
#include <antipodes/geometry.hpp>
#include <antipodes/point_io.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace antipodes {
namespace {

PointSet random_disk_points(std::size_t n, std::uint64_t seed, double radius = 0.5) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<double> coords;
    while (coords.size() < 2 * n) {
        const double x = u(rng);
        const double y = u(rng);
        if (x * x + y * y > radius * radius) continue;
        coords.push_back(x);
        coords.push_back(y);
    }
    return PointSet(2, std::move(coords));
}

TEST(Distance, Examples) {
    EXPECT_EQ(distance(Point{0, 0}, Point{0, 0}), 0.0);
    EXPECT_EQ(distance(Point{0, 0}, Point{3, 4}), 5.0);
    EXPECT_THROW(distance(Point{0, 0}, Point{1, 1, 1}), InputError);
}

TEST(Distance, SymmetryAndTriangleInequality) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t d = 1 + t % 4;
        std::vector<double> a(d), b(d), c(d);
        for (std::size_t i = 0; i < d; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
            c[i] = u(rng);
        }
        const Point p(a), q(b), r(c);
        EXPECT_EQ(distance(p, q), distance(q, p));
        EXPECT_LE(distance(p, r), distance(p, q) + distance(q, r) + 1e-15);
        EXPECT_GT(distance(p, q), 0.0);
    }
}

TEST(Point, RejectsNonFinite) {
    EXPECT_THROW(Point({0.0, std::numeric_limits<double>::quiet_NaN()}), InputError);
    EXPECT_THROW(Point({std::numeric_limits<double>::infinity()}), InputError);
    EXPECT_THROW(Point(std::vector<double>{}), InputError);
}

TEST(Epsilon, OpenUnitInterval) {
    EXPECT_THROW(Epsilon(0.0), InputError);
    EXPECT_THROW(Epsilon(1.0), InputError);
    EXPECT_THROW(Epsilon(-0.5), InputError);
    EXPECT_EQ(Epsilon(0.25).far_threshold(), 0.75);
}

TEST(PointSet, RejectsEmptyAndMixedDimensions) {
    EXPECT_THROW(PointSet(2, {}), InputError);
    EXPECT_THROW(PointSet(2, {1.0, 2.0, 3.0}), InputError);
    EXPECT_THROW(PointSet(std::vector<Point>{Point{0, 0}, Point{1, 1, 1}}), InputError);
}

TEST(Diameter, Examples) {
    EXPECT_EQ(diameter(PointSet({Point{0, 0}, Point{1, 0}})), 1.0);
    EXPECT_DOUBLE_EQ(diameter(PointSet({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}})),
                     std::numbers::sqrt2);
    EXPECT_EQ(diameter(PointSet({Point{0.3, 0.7}})), 0.0);
}

TEST(Diameter, MatchesBruteForceScan) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PointSet ps = random_disk_points(200, seed);
        double best = 0.0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = 0; j < ps.size(); ++j) best = std::max(best, distance(ps[i], ps[j]));
        }
        EXPECT_EQ(ps.diameter(), best);
        const auto [i, j] = ps.diameter_pair();
        EXPECT_EQ(distance(ps[i], ps[j]), best);
    }
}

TEST(Diameter, HigherDimensionsMatchBruteForce) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (std::size_t d : {1u, 3u, 5u}) {
        std::vector<double> coords(300 * d);
        for (auto& c : coords) c = g(rng);
        const PointSet ps(d, coords);
        EXPECT_EQ(ps.diameter(), brute_force_diameter(d, coords).value);
    }
}

TEST(Diameter, DegenerateConfigurations) {
    EXPECT_EQ(diameter(PointSet(2, {1, 1, 1, 1, 1, 1})), 0.0);
    EXPECT_EQ(diameter(PointSet(2, {0, 0, 0.25, 0.25, 0.5, 0.5, 1, 1})), std::sqrt(2.0));
}

TEST(Diameter, InvariantUnderRigidMotion) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> shift(-5.0, 5.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PointSet ps = random_disk_points(300, seed);
        const PointSet moved = rigid_motion_2d(ps, angle(rng), shift(rng), shift(rng));
        EXPECT_NEAR(moved.diameter(), ps.diameter(), 1e-9);
    }
}

TEST(Normalize, TwoPoints) {
    const PointSet out = normalize_to_unit_diameter(PointSet({Point{0, 0}, Point{2, 0}}));
    EXPECT_EQ(out.diameter(), 1.0);
    EXPECT_DOUBLE_EQ(out[0][0], -0.5);
    EXPECT_DOUBLE_EQ(out[1][0], 0.5);
    EXPECT_DOUBLE_EQ(out[0][1], 0.0);
}

TEST(Normalize, UnitSetIsUnchangedUpToTranslation) {
    const PointSet ps = gen_circle(64);
    const PointSet out = normalize_to_unit_diameter(ps);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        EXPECT_NEAR(out[i][0], ps[i][0], 1e-12);
        EXPECT_NEAR(out[i][1], ps[i][1], 1e-12);
    }
}

TEST(Normalize, RandomSetsHaveUnitDiameter) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PointSet raw = random_disk_points(50, seed, scale(rng));
        const PointSet out = normalize_to_unit_diameter(raw);
        EXPECT_NEAR(out.diameter(), 1.0, 2e-12);
        const auto c = centroid(out);
        EXPECT_NEAR(c[0], 0.0, 1e-12);
        EXPECT_NEAR(c[1], 0.0, 1e-12);
    }
}

TEST(Normalize, RejectsDegenerateInput) {
    EXPECT_THROW(normalize_to_unit_diameter(PointSet(2, {0.5, 0.5, 0.5, 0.5})), InputError);
    EXPECT_THROW(normalize_to_unit_diameter(PointSet(2, {0.5, 0.5})), InputError);
}

TEST(FiniteMetric, ValidatesAxioms) {
    EXPECT_NO_THROW(FiniteMetric(2, {0, 1, 1, 0}));
    EXPECT_THROW(FiniteMetric(2, {0, 1, 2, 0}), InputError);
    EXPECT_THROW(FiniteMetric(2, {1, 1, 1, 0}), InputError);
    EXPECT_THROW(FiniteMetric(2, {0, -1, -1, 0}), InputError);
    EXPECT_THROW(FiniteMetric(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}), InputError);
    EXPECT_THROW(FiniteMetric(3, {0, 1}), InputError);
}

TEST(PointIo, RoundTripIsExact) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> coords(3 * 40);
    for (auto& c : coords) c = u(rng);
    const PointSet ps(3, coords);
    std::stringstream buf;
    write_point_set(buf, ps);
    const PointSet back = read_point_set(buf);
    EXPECT_EQ(back.flat(), ps.flat());
    EXPECT_EQ(back.dim(), 3u);
}

TEST(PointIo, SkipsCommentsAndBlankLines) {
    std::istringstream in("# header\n2 2\n\n0 0\n# mid\n1 0\n");
    const PointSet ps = read_point_set(in);
    EXPECT_EQ(ps.size(), 2u);
    EXPECT_EQ(ps.diameter(), 1.0);
}

TEST(PointIo, ErrorsNameTheLine) {
    std::istringstream bad_value("2 3\n0 0\n1 x\n0 1\n");
    try {
        read_point_set(bad_value);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    std::istringstream short_file("2 3\n0 0\n1 1\n");
    EXPECT_THROW(read_point_set(short_file), InputError);
    std::istringstream extra_column("2 1\n0 0 0\n");
    EXPECT_THROW(read_point_set(extra_column), InputError);
    std::istringstream bad_header("two 1\n0 0\n");
    EXPECT_THROW(read_point_set(bad_header), InputError);
}

TEST(PointIo, MetricRoundTrip) {
    const FiniteMetric m = star_metric(5);
    std::stringstream buf;
    write_metric(buf, m);
    const FiniteMetric back = read_metric(buf);
    EXPECT_EQ(back.table(), m.table());
}

}  // namespace
}  // namespace antipodes

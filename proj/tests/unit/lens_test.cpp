#include <antipodes/errors.hpp>
#include <antipodes/lens.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace antipodes {
namespace {

using testing::circle_circle;

struct GridPoint {
    double d;
    double eps;
};

// 10 x 10 grid of admissible (d, eps).
std::vector<GridPoint> lens_grid() {
    std::vector<GridPoint> out;
    for (int i = 0; i < 10; ++i) {
        const double eps = 1e-4 * std::pow(100.0, i / 9.0);
        const double lo = 10.0 * std::sqrt(eps);
        for (int j = 0; j < 10; ++j) out.push_back({lo + (1.0 - lo) * j / 9.0, eps});
    }
    return out;
}

TEST(Annuli, Example) {
    const LensGeometry g = annuli_intersection(0.5, Epsilon(0.01));
    EXPECT_NEAR(g.y_outer, std::sqrt(3.75) / 2.0, 1e-15);
    EXPECT_NEAR(g.y_outer, 0.968246, 1e-6);
    EXPECT_NEAR(g.x_side, 0.0199, 1e-15);
    EXPECT_NEAR(g.side_width, 2.0 * 0.0199, 1e-15);
    EXPECT_EQ(g.cover_count, static_cast<std::size_t>(std::ceil(kLensCoverConstant / 0.5)));
}

TEST(Annuli, FormulasMatchNumericIntersection) {
    for (const auto& [d, eps] : lens_grid()) {
        const LensGeometry g = annuli_intersection(d, Epsilon(eps));
        const auto outer = circle_circle({-d / 2, 0}, 1.0, {d / 2, 0}, 1.0);
        const auto inner = circle_circle({-d / 2, 0}, 1.0 - eps, {d / 2, 0}, 1.0 - eps);
        const auto side = circle_circle({-d / 2, 0}, 1.0, {d / 2, 0}, 1.0 - eps);
        ASSERT_EQ(outer.size(), 2u);
        ASSERT_EQ(inner.size(), 2u);
        ASSERT_EQ(side.size(), 2u);
        EXPECT_NEAR(outer.back().x, 0.0, 1e-9);
        EXPECT_NEAR(outer.back().y, g.y_outer, 1e-9);
        EXPECT_NEAR(inner.back().x, 0.0, 1e-9);
        EXPECT_NEAR(inner.back().y, g.y_inner, 1e-9);
        EXPECT_NEAR(side.back().x, g.x_side, 1e-9);
        EXPECT_NEAR(side.back().y, g.y_side, 1e-9);
    }
}

TEST(Annuli, Extents) {
    for (const auto& [d, eps] : lens_grid()) {
        const LensGeometry g = annuli_intersection(d, Epsilon(eps));
        EXPECT_GE(g.y_outer - g.y_inner, eps / 2);
        EXPECT_LE(g.y_outer - g.y_inner, 2 * eps);
        EXPECT_LE(g.side_width, 4 * eps / d);
        EXPECT_EQ(g.side_width, 2 * g.x_side);
    }
}

TEST(Annuli, CollapsesAsEpsilonVanishes) {
    const LensGeometry g = annuli_intersection(0.5, Epsilon(1e-12));
    EXPECT_NEAR(g.y_inner, g.y_outer, 1e-11);
    EXPECT_LT(g.x_side, 1e-11);
}

TEST(Annuli, RejectsGapWithoutIntersection) {
    EXPECT_THROW(annuli_intersection(0.0, Epsilon(0.01)), InputError);
    EXPECT_THROW(annuli_intersection(0.005, Epsilon(0.01)), InputError);
    EXPECT_THROW(annuli_intersection(1.01, Epsilon(0.01)), InputError);
    EXPECT_THROW(annuli_intersection(1.0, Epsilon(0.6)), InputError);
    EXPECT_NO_THROW(annuli_intersection(0.01, Epsilon(0.01)));
    EXPECT_NO_THROW(annuli_intersection(1.0, Epsilon(0.5)));
}

TEST(LensCover, RejectsGapOutsideProofRange) {
    EXPECT_THROW(lens_cover_audit(0.5, Epsilon(0.01)), InputError);
    EXPECT_THROW(lens_cover_audit(1.01, Epsilon(0.0001)), InputError);
    EXPECT_NO_THROW(lens_cover_audit(0.1, Epsilon(0.0001)));
}

TEST(LensCover, ExampleWithinRecordedConstant) {
    const LensCover c = lens_cover_audit(0.9, Epsilon(1.0 / 256.0));
    EXPECT_LE(static_cast<double>(c.cells), kLensCoverConstant / 0.9);
    EXPECT_GT(c.cells, 0u);
    EXPECT_DOUBLE_EQ(c.enlargement, std::sqrt(2.0) / 1024.0);
}

TEST(LensCover, NonincreasingInGapUpToRasterJitter) {
    for (int a = 8; a <= 12; a += 2) {
        const double eps = std::ldexp(1.0, -a);
        const double lo = 10.0 * std::sqrt(eps);
        std::size_t prev = SIZE_MAX;
        std::size_t first = 0;
        for (int j = 0; j <= 12; ++j) {
            const double d = lo + (1.0 - lo) * j / 12.0;
            const std::size_t cells = lens_cover_audit(d, Epsilon(eps)).cells;
            if (j == 0) {
                first = cells;
            }
            EXPECT_LE(cells, prev == SIZE_MAX ? prev : prev + 2) << "eps=" << eps << " d=" << d;
            prev = cells;
        }
        EXPECT_LT(prev, first);
    }
}

TEST(LensCover, SingleGlobalConstant) {
    double worst = 0.0;
    for (int a = 8; a <= 14; ++a) {
        const double eps = std::ldexp(1.0, -a);
        const double lo = 10.0 * std::sqrt(eps);
        for (int j = 0; j <= 8; ++j) {
            const double d = lo + (1.0 - lo) * j / 8.0;
            const LensCover c = lens_cover_audit(d, Epsilon(eps));
            EXPECT_DOUBLE_EQ(c.constant, static_cast<double>(c.cells) * d);
            worst = std::max(worst, c.constant);
        }
    }
    ::testing::Test::RecordProperty("max_cells_times_d", std::to_string(worst));
    EXPECT_LE(worst, kLensCoverConstant);
}

TEST(LensCover, UpperComponentOnlyAtFullGap) {
    const Epsilon eps(1.0 / 1024.0);
    const LensCover full = lens_cover_audit(1.0, eps);
    EXPECT_LE(static_cast<double>(full.cells), kLensCoverConstant);
    // The lower component is the mirror image; counting it would double the cells.
    EXPECT_LE(full.cells, lens_cover_audit(0.99, eps).cells);
}

}  // namespace
}  // namespace antipodes

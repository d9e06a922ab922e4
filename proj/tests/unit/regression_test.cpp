#include <antipodes/errors.hpp>
#include <antipodes/regression.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace antipodes {
namespace {

TEST(LeastSquares, ExactLine) {
    const std::vector<double> x = {1, 2, 3, 4, 5};
    std::vector<double> y;
    for (double v : x) y.push_back(-2.5 * v + 7.0);
    const LinearFit f = least_squares(x, y);
    EXPECT_NEAR(f.slope, -2.5, 1e-14);
    EXPECT_NEAR(f.intercept, 7.0, 1e-13);
    EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
    EXPECT_EQ(f.points, 5u);
}

TEST(LeastSquares, ConstantResponse) {
    const std::vector<double> x = {0, 1, 2};
    const std::vector<double> y = {4, 4, 4};
    const LinearFit f = least_squares(x, y);
    EXPECT_EQ(f.slope, 0.0);
    EXPECT_EQ(f.r_squared, 1.0);
}

TEST(LeastSquares, NoisyDataHasRSquaredInUnitInterval) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
        std::vector<double> x, y;
        for (int i = 0; i < 20; ++i) {
            x.push_back(i);
            y.push_back(0.1 * i * (t % 3) + g(rng));
        }
        const LinearFit f = least_squares(x, y);
        EXPECT_GE(f.r_squared, 0.0);
        EXPECT_LE(f.r_squared, 1.0);
    }
}

TEST(LeastSquares, RejectsBadInput) {
    const std::vector<double> one = {1};
    const std::vector<double> two = {1, 2};
    const std::vector<double> three = {1, 2, 3};
    const std::vector<double> flat = {2, 2, 2};
    const std::vector<double> nan = {1, std::numeric_limits<double>::quiet_NaN(), 3};
    EXPECT_THROW(least_squares(one, one), InputError);
    EXPECT_THROW(least_squares(two, three), InputError);
    EXPECT_THROW(least_squares(flat, three), InputError);
    EXPECT_THROW(least_squares(three, nan), InputError);
}

}  // namespace
}  // namespace antipodes

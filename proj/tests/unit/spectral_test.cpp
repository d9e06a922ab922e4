#include <antipodes/errors.hpp>
#include <antipodes/matrix.hpp>
#include <antipodes/spectral.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace antipodes {
namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

AntipodalityMatrix random_symmetric(std::mt19937_64& rng, std::size_t k, double density, bool loops) {
    std::bernoulli_distribution coin(density);
    Pairs pairs;
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = loops ? i : i + 1; j < k; ++j) {
            if (coin(rng)) pairs.emplace_back(i, j);
        }
    }
    return AntipodalityMatrix(k, pairs);
}

TEST(TopEigenvalue, Swap) {
    const Pairs p = {{0, 1}};
    const auto e = top_eigenvalue(AntipodalityMatrix(2, p));
    EXPECT_NEAR(e.value, 1.0, 1e-12);
    EXPECT_GE(e.upper, e.value);
}

TEST(TopEigenvalue, CompleteGraphK3) {
    const Pairs p = {{0, 1}, {0, 2}, {1, 2}};
    EXPECT_NEAR(top_eigenvalue(AntipodalityMatrix(3, p)).value, 2.0, 1e-12);
}

TEST(TopEigenvalue, ZeroMatrixAndSingleLoop) {
    EXPECT_EQ(top_eigenvalue(AntipodalityMatrix(4, {})).value, 0.0);
    const Pairs p = {{0, 0}};
    EXPECT_NEAR(top_eigenvalue(AntipodalityMatrix(1, p)).value, 1.0, 1e-12);
}

TEST(TopEigenvalue, MatchesDenseSolver) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 10; ++t) {
        const auto m = random_symmetric(rng, 200, 0.02 + 0.05 * t, t % 2 == 0);
        const auto e = top_eigenvalue(m);
        const double oracle = testing::dense_top_eigenvalue(m);
        EXPECT_NEAR(e.value, oracle, 1e-6 * oracle) << t;
        EXPECT_LE(e.value, oracle * (1.0 + 1e-12));
        EXPECT_GE(e.upper, oracle * (1.0 - 1e-12));
    }
}

TEST(TopEigenvalue, BipartiteAndDisconnected) {
    // K_{3,5} has top eigenvalue sqrt(15); add an isolated triangle (2).
    Pairs p;
    for (std::uint32_t i = 0; i < 3; ++i) {
        for (std::uint32_t j = 3; j < 8; ++j) p.emplace_back(i, j);
    }
    p.insert(p.end(), {{8, 9}, {9, 10}, {8, 10}});
    const auto e = top_eigenvalue(AntipodalityMatrix(12, p));
    EXPECT_NEAR(e.value, std::sqrt(15.0), 1e-8);
}

TEST(TopEigenvalue, BoundedBySquareRootOfTrace) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto m = random_symmetric(rng, 5 + rng() % 120, 0.01 + 0.3 * (t % 10) / 10.0, t % 3 == 0);
        const auto e = top_eigenvalue(m);
        EXPECT_LE(e.value, std::sqrt(static_cast<double>(trace_mtm(m))) * (1.0 + 1e-12));
    }
}

TEST(TopEigenvalue, RayleighQuotientOfOnesIsALowerBound) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const auto m = random_symmetric(rng, 150, 0.05, false);
        const double rq = static_cast<double>(m.ones()) / static_cast<double>(m.size());
        EXPECT_GE(top_eigenvalue(m).value, rq * (1.0 - 1e-12));
    }
}

TEST(TopEigenvalue, IterationCapSurfacesBracket) {
    std::mt19937_64 rng(3);
    const auto m = random_symmetric(rng, 300, 0.05, false);
    try {
        top_eigenvalue(m, {.tolerance = 1e-15, .max_iterations = 2});
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_GT(e.lower(), 0.0);
        EXPECT_GE(e.upper(), e.lower());
    }
}

}  // namespace
}  // namespace antipodes

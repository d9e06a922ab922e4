#include "antipodes/finite_metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "antipodes/errors.hpp"

namespace antipodes {
namespace {

void check_triangle(const std::vector<double>& t, std::size_t n, std::size_t i, std::size_t j,
                    std::size_t k) {
    const double slack = 1e-12 * (1.0 + t[i * n + k]);
    if (t[i * n + k] > t[i * n + j] + t[j * n + k] + slack) {
        throw InputError("triangle inequality fails for (" + std::to_string(i) + ", " +
                         std::to_string(j) + ", " + std::to_string(k) + ")");
    }
}

}  // namespace

FiniteMetric::FiniteMetric(std::size_t n, std::vector<double> table, std::size_t triangle_samples)
    : n_(n), table_(std::move(table)) {
    if (n_ == 0) {
        throw InputError("a finite metric needs at least one point");
    }
    if (table_.size() != n_ * n_) {
        throw InputError("distance table must have n*n entries");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (table_[i * n_ + i] != 0.0) {
            throw InputError("distance table needs a zero diagonal (row " + std::to_string(i) + ")");
        }
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double a = table_[i * n_ + j];
            if (!std::isfinite(a) || a < 0.0) {
                throw InputError("distances must be finite and non-negative");
            }
            if (a != table_[j * n_ + i]) {
                throw InputError("distance table is not symmetric at (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            }
            diameter_ = std::max(diameter_, a);
        }
    }
    if (n_ <= 64) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                for (std::size_t k = 0; k < n_; ++k) {
                    check_triangle(table_, n_, i, j, k);
                }
            }
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
        for (std::size_t s = 0; s < triangle_samples; ++s) {
            check_triangle(table_, n_, pick(rng), pick(rng), pick(rng));
        }
    }
}

}  // namespace antipodes

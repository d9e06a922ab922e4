#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace antipodes {

// A finite metric space on {0, ..., n-1} stored as a dense distance table.
class FiniteMetric {
public:
    // `table` is row-major n x n. Validates symmetry, a zero diagonal,
    // non-negativity and the triangle inequality (exhaustively for
    // n <= 64, otherwise on `triangle_samples` seeded random triples).
    FiniteMetric(std::size_t n, std::vector<double> table, std::size_t triangle_samples = 20000);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return table_[i * n_ + j]; }
    const std::vector<double>& table() const noexcept { return table_; }
    double diameter() const noexcept { return diameter_; }

private:
    std::size_t n_;
    std::vector<double> table_;
    double diameter_ = 0.0;
};

}  // namespace antipodes

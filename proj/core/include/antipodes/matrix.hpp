#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace antipodes {

// Symmetric 0/1 matrix stored as sorted adjacency rows (CSR). Entry (i, j)
// is one iff j appears in row i. Doubles as the box graph's adjacency.
class AntipodalityMatrix {
public:
    AntipodalityMatrix() = default;
    // Builds from unordered pairs; (i, i) puts a one on the diagonal, and
    // (i, j) with i != j sets both (i, j) and (j, i). Duplicates are merged.
    AntipodalityMatrix(std::size_t k, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

    std::size_t size() const noexcept { return row_start_.empty() ? 0 : row_start_.size() - 1; }
    std::span<const std::uint32_t> row(std::size_t i) const noexcept {
        return {cols_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
    }
    std::size_t degree(std::size_t i) const noexcept { return row_start_[i + 1] - row_start_[i]; }
    // Number of ones, counting (i, j) and (j, i) separately.
    std::size_t ones() const noexcept { return cols_.size(); }
    bool operator()(std::size_t i, std::size_t j) const;
    std::size_t diagonal_ones() const;

    // Unordered pairs i <= j with a one, sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> upper_pairs() const;

    // y = M x
    void multiply(std::span<const double> x, std::span<double> y) const;

private:
    std::vector<std::size_t> row_start_;
    std::vector<std::uint32_t> cols_;
};

// tr(M^T M), which for a symmetric 0/1 matrix is its number of ones.
std::uint64_t trace_mtm(const AntipodalityMatrix& m);

// <n, M n> in exact integer arithmetic.
std::uint64_t quadratic_form(const AntipodalityMatrix& m, std::span<const std::uint64_t> n);

}  // namespace antipodes

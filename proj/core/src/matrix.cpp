#include "antipodes/matrix.hpp"

#include <algorithm>

#include "antipodes/errors.hpp"

namespace antipodes {

AntipodalityMatrix::AntipodalityMatrix(
    std::size_t k, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
    std::vector<std::size_t> degree(k, 0);
    for (const auto& [i, j] : pairs) {
        if (i >= k || j >= k) {
            throw InputError("matrix entry index out of range");
        }
        ++degree[i];
        if (i != j) {
            ++degree[j];
        }
    }
    row_start_.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        row_start_[i + 1] = row_start_[i] + degree[i];
    }
    cols_.resize(row_start_[k]);
    std::vector<std::size_t> fill(row_start_.begin(), row_start_.end() - 1);
    for (const auto& [i, j] : pairs) {
        cols_[fill[i]++] = j;
        if (i != j) {
            cols_[fill[j]++] = i;
        }
    }
    // Sort and merge duplicate entries row by row.
    std::vector<std::uint32_t> merged;
    merged.reserve(cols_.size());
    std::vector<std::size_t> starts(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[i]);
        auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[i + 1]);
        std::sort(first, last);
        starts[i] = merged.size();
        std::unique_copy(first, last, std::back_inserter(merged));
    }
    starts[k] = merged.size();
    row_start_ = std::move(starts);
    cols_ = std::move(merged);
}

bool AntipodalityMatrix::operator()(std::size_t i, std::size_t j) const {
    const auto r = row(i);
    return std::binary_search(r.begin(), r.end(), static_cast<std::uint32_t>(j));
}

std::size_t AntipodalityMatrix::diagonal_ones() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        count += (*this)(i, i) ? 1 : 0;
    }
    return count;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> AntipodalityMatrix::upper_pairs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::uint32_t j : row(i)) {
            if (j >= i) {
                out.emplace_back(static_cast<std::uint32_t>(i), j);
            }
        }
    }
    return out;
}

void AntipodalityMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < size(); ++i) {
        double sum = 0.0;
        for (std::uint32_t j : row(i)) {
            sum += x[j];
        }
        y[i] = sum;
    }
}

std::uint64_t trace_mtm(const AntipodalityMatrix& m) { return m.ones(); }

std::uint64_t quadratic_form(const AntipodalityMatrix& m, std::span<const std::uint64_t> n) {
    if (n.size() != m.size()) {
        throw InputError("occupancy vector length does not match the matrix");
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t row_sum = 0;
        for (std::uint32_t j : m.row(i)) {
            row_sum += n[j];
        }
        total += n[i] * row_sum;
    }
    return total;
}

}  // namespace antipodes

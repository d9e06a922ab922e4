#include "antipodes/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "antipodes/errors.hpp"

namespace antipodes {
namespace {

bool key_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

GridIndex::GridIndex(const PointSet& ps, double cell_side) : dim_(ps.dim()), side_(cell_side) {
    std::vector<std::size_t> all(ps.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    build(ps, all);
}

GridIndex::GridIndex(const PointSet& ps, std::span<const std::size_t> subset, double cell_side)
    : dim_(ps.dim()), side_(cell_side) {
    build(ps, subset);
}

void GridIndex::build(const PointSet& ps, std::span<const std::size_t> subset) {
    if (!(side_ > 0.0) || !std::isfinite(side_)) {
        throw InputError("grid cell side must be positive");
    }
    if (ps.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw InputError("point set too large for the grid index");
    }
    const std::size_t m = subset.size();
    std::vector<std::int64_t> point_keys(m * dim_);
    for (std::size_t t = 0; t < m; ++t) {
        const auto p = ps[subset[t]];
        for (std::size_t k = 0; k < dim_; ++k) {
            point_keys[t * dim_ + k] = static_cast<std::int64_t>(std::floor(p[k] / side_));
        }
    }
    auto pkey = [&](std::size_t t) {
        return std::span<const std::int64_t>(point_keys.data() + t * dim_, dim_);
    };

    // Mixed-radix packing (first axis most significant) preserves the
    // lexicographic key order; used whenever the key box fits in 64 bits.
    min_key_.assign(dim_, std::numeric_limits<std::int64_t>::max());
    radix_.assign(dim_, 1);
    std::vector<std::int64_t> max_key(dim_, std::numeric_limits<std::int64_t>::min());
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t k = 0; k < dim_; ++k) {
            min_key_[k] = std::min(min_key_[k], point_keys[t * dim_ + k]);
            max_key[k] = std::max(max_key[k], point_keys[t * dim_ + k]);
        }
    }
    packable_ = m > 0;
    unsigned __int128 capacity = 1;
    for (std::size_t k = 0; k < dim_ && packable_; ++k) {
        const unsigned __int128 extent =
            static_cast<unsigned __int128>(static_cast<__int128>(max_key[k]) - min_key_[k] + 1);
        capacity *= extent;
        radix_[k] = static_cast<std::uint64_t>(std::min<unsigned __int128>(extent, UINT64_MAX));
        packable_ = capacity < (static_cast<unsigned __int128>(1) << 63);
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::uint64_t> point_packed;
    if (packable_) {
        point_packed.resize(m);
        for (std::size_t t = 0; t < m; ++t) {
            point_packed[t] = *pack(pkey(t));
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return point_packed[a] != point_packed[b] ? point_packed[a] < point_packed[b]
                                                      : subset[a] < subset[b];
        });
    } else {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto ka = pkey(a);
            const auto kb = pkey(b);
            if (key_less(ka, kb)) {
                return true;
            }
            if (key_less(kb, ka)) {
                return false;
            }
            return subset[a] < subset[b];
        });
    }

    members_.clear();
    keys_.clear();
    start_.clear();
    packed_.clear();
    members_.reserve(m);
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t t = order[r];
        const bool fresh = r == 0 || (packable_ ? point_packed[order[r - 1]] != point_packed[t]
                                                : key_less(pkey(order[r - 1]), pkey(t)));
        if (fresh) {
            start_.push_back(r);
            keys_.insert(keys_.end(), pkey(t).begin(), pkey(t).end());
            if (packable_) {
                packed_.push_back(point_packed[t]);
            }
        }
        members_.push_back(static_cast<std::uint32_t>(subset[t]));
    }
    start_.push_back(m);
}

std::optional<std::uint64_t> GridIndex::pack(std::span<const std::int64_t> key) const {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
        const std::int64_t offset = key[k] - min_key_[k];
        if (offset < 0 || static_cast<std::uint64_t>(offset) >= radix_[k]) {
            return std::nullopt;
        }
        code = code * radix_[k] + static_cast<std::uint64_t>(offset);
    }
    return code;
}

std::optional<std::size_t> GridIndex::find(std::span<const std::int64_t> key) const {
    if (packable_) {
        const auto code = pack(key);
        if (!code) {
            return std::nullopt;
        }
        const auto it = std::lower_bound(packed_.begin(), packed_.end(), *code);
        if (it != packed_.end() && *it == *code) {
            return static_cast<std::size_t>(it - packed_.begin());
        }
        return std::nullopt;
    }
    std::size_t lo = 0;
    std::size_t hi = cell_count();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (key_less(this->key(mid), key)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < cell_count() && std::equal(key.begin(), key.end(), this->key(lo).begin())) {
        return lo;
    }
    return std::nullopt;
}

}  // namespace antipodes

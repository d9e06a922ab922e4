#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace antipodes::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(begin, end, worker) over [0, count) in dynamically claimed
// chunks. Worker w owns slot w of whatever accumulator the caller keeps, so
// integer results are independent of scheduling.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, std::size_t chunk, Body&& body) {
    threads = std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                               static_cast<unsigned>((count + chunk - 1) / chunk)));
    if (threads <= 1) {
        if (count > 0) {
            body(std::size_t{0}, count, 0u);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned w) {
        for (;;) {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) {
                return;
            }
            body(begin, std::min(count, begin + chunk), w);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned w = 1; w < threads; ++w) {
        pool.emplace_back(worker, w);
    }
    worker(0);
}

inline unsigned worker_slots(unsigned requested) { return resolve_threads(requested); }

}  // namespace antipodes::detail

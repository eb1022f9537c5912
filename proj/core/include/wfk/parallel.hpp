#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace wfk {

/// Runs fn over [0, count) split into contiguous chunks, one per worker.
/// workers <= 0 picks the hardware concurrency. Every index is processed
/// exactly once and callers write disjoint output slots, so results do not
/// depend on the worker count.
inline void parallel_for(std::size_t count, int workers,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t n_workers = workers > 0 ? static_cast<std::size_t>(workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::min(n_workers, count);
    if (n_workers <= 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    const std::size_t chunk = (count + n_workers - 1) / n_workers;
    for (std::size_t w = 0; w < n_workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& t : pool) t.join();
}

} // namespace wfk

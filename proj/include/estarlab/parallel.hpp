#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace estarlab {

/// Worker cap: ESTARLAB_THREADS when set, else hardware concurrency
/// clamped to 8.
inline int thread_cap() {
    if (const char* env = std::getenv("ESTARLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

/// Runs fn(i) for i in [0, n) over contiguous index blocks. Results must be
/// written to per-index slots; callers then reduce in index order, so the
/// outcome is independent of the schedule.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 0) threads = thread_cap();
    if (n == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace estarlab

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace geotsp {

inline int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. Tasks must write
// results into per-index slots; assembly is then order-independent.
template <typename F>
void parallel_for(std::size_t count, int workers, F&& fn) {
    if (workers <= 0) workers = default_workers();
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(workers, count));
    pool.reserve(spawn - 1);
    for (int t = 1; t < spawn; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
}

}  // namespace geotsp

#ifndef TWISTLAB_PARALLEL_HPP
#define TWISTLAB_PARALLEL_HPP

// Data-parallel loop over independent work items.  Results must be written
// into index-addressed slots by the callable; every reduction in this
// project then merges the slots in a fixed order, so the outcome is
// independent of the worker count.

#include <atomic>
#include <thread>
#include <vector>

#include "twistlab/numeric.hpp"

namespace twistlab {

template <class Fn>
void parallel_for(i64 n, int workers, Fn&& fn) {
    if (n <= 0) return;
    workers = std::max(1, std::min<int>(workers, static_cast<int>(n)));
    if (workers == 1) {
        for (i64 i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<i64> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                i64 i = next.fetch_add(1);
                if (i >= n) break;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace twistlab

#endif

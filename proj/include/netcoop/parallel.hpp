#pragma once
#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

// Deterministic parallel helper. Work over [0, n) is always split into a
// FIXED number of chunks (independent of thread count); callers that reduce
// do so into per-chunk slots and fold them in chunk order afterwards, so
// results are identical whether the pool has 1 thread or 64. NETCOOP_THREADS
// caps the worker count.

namespace netcoop {

inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NETCOOP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = static_cast<unsigned>(v);
    }
    return hw;
}

inline constexpr int kChunks = 16;

// fn(chunk, begin, end) for chunk = 0..min(kChunks,n)-1; chunk boundaries
// depend only on n
template <typename Fn>
void parallel_chunks(int n, Fn&& fn) {
    if (n <= 0) return;
    int chunks = std::min(kChunks, n);
    auto bound = [&](int c) { return static_cast<int>(static_cast<long long>(n) * c / chunks); };
    int workers = static_cast<int>(std::min<unsigned>(worker_count(), static_cast<unsigned>(chunks)));
    if (workers <= 1) {
        for (int c = 0; c < chunks; ++c) fn(c, bound(c), bound(c + 1));
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (int c = t; c < chunks; c += workers) fn(c, bound(c), bound(c + 1));
        });
    for (auto& th : pool) th.join();
}

} // namespace netcoop

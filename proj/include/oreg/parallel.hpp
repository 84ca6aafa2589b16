#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace oreg {

// Worker count: ORIENTED_REG_THREADS when set, hardware concurrency
// otherwise, always at least 1.
inline int default_thread_count() {
    if (const char* env = std::getenv("ORIENTED_REG_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, begin, end) over contiguous chunks of [0, n).
// Results must be merged by the caller per chunk index, which keeps parallel
// and serial runs identical.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 0) threads = default_thread_count();
    std::size_t chunk_count = std::min<std::size_t>(threads, n);
    if (chunk_count <= 1) {
        if (n > 0) fn(0, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t per = (n + chunk_count - 1) / chunk_count;
    for (std::size_t c = 0; c < chunk_count; ++c) {
        std::size_t begin = c * per;
        std::size_t end = std::min(n, begin + per);
        if (begin >= end) break;
        pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace oreg

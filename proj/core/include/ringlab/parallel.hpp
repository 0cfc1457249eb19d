#pragma once

#include <thread>
#include <vector>

#include "ringlab/intmath.hpp"

namespace ringlab {

/// Splits [0, n) into contiguous chunks, one per worker. Results that must be
/// deterministic are merged by the caller in worker order.
template <typename Fn>
void parallel_chunks(u64 n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        fn(0, 0, n);
        return;
    }
    u64 t = std::min<u64>(u64(threads), n);
    std::vector<std::thread> pool;
    u64 chunk = (n + t - 1) / t;
    for (u64 w = 0; w < t; ++w) {
        u64 begin = w * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, w, begin, end] { fn(int(w), begin, end); });
    }
    for (auto& th : pool) th.join();
}

} // namespace ringlab

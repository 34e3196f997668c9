// Copyright (c) 2026 the orca authors.
// orca is licensed under the Apache License, Version 2.0.
// SPDX: Apache-2.0

#ifndef ORCA_PARALLEL_HPP
#define ORCA_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace orca {

// Worker count: ORCA_THREADS caps it, 0/unset means hardware concurrency.
inline int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("ORCA_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0 && cap < hw) return cap;
    }
    return hw;
}

// Static partition of [0, n) into one contiguous chunk per worker. Each index
// is processed exactly once by a fixed worker, so any per-worker accumulation
// merged in worker order is bit-deterministic.
template <typename F>
void parallel_for(int64_t n, F&& body, int workers = 0) {
    if (n <= 0) return;
    if (workers <= 0) workers = thread_count();
    if (workers > n) workers = static_cast<int>(n);
    if (workers == 1) {
        for (int64_t i = 0; i < n; ++i) body(i, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        int64_t begin = n * w / workers;
        int64_t end = n * (w + 1) / workers;
        pool.emplace_back([&body, begin, end, w]() {
            for (int64_t i = begin; i < end; ++i) body(i, w);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace orca

#endif

#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nodallab {

/// Worker budget: NODALLAB_THREADS when set (>= 1), otherwise hardware concurrency.
inline int thread_budget() {
    if (const char* env = std::getenv("NODALLAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs f(i) for i in [0, n); results must go into caller-indexed slots so the
/// outcome does not depend on the thread count.
template <typename F>
void parallel_for(int n, F&& f) {
    const int workers = std::min(thread_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace nodallab

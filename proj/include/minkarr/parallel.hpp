#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace minkarr {

/// Calls f(i) for i in [0, n), striding indices over `threads` workers. Callers
/// keep results index-addressed so the outcome does not depend on scheduling.
template <typename F>
void parallel_for(std::size_t n, int threads, F&& f) {
    const auto t = static_cast<std::size_t>(std::max(1, threads));
    if (t == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += t)
                f(i);
        });
    for (auto& th : pool)
        th.join();
}

} // namespace minkarr

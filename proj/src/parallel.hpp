#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace stmdf::detail {

// Splits [0, height) into contiguous row bands, one per worker. Each band
// writes a disjoint slice of the output, so results are bitwise identical
// for any thread count.
template <typename Fn>
void parallel_rows(std::size_t height, int threads, Fn&& fn) {
    const std::size_t n = std::max(1, threads);
    if (n <= 1 || height < 2 * n) {
        fn(std::size_t{0}, height);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(n);
    const std::size_t band = (height + n - 1) / n;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t y0 = t * band;
        const std::size_t y1 = std::min(height, y0 + band);
        if (y0 >= y1) break;
        workers.emplace_back([&fn, y0, y1] { fn(y0, y1); });
    }
    for (auto& w : workers) w.join();
}

} // namespace stmdf::detail

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace confspace {

/// Evaluates f(0..count-1) on up to `jobs` threads; results keep index order,
/// so output never depends on the number of threads.
template <class F>
auto parallel_map(size_t count, int jobs, F f) -> std::vector<decltype(f(size_t{}))>
{
    using R = decltype(f(size_t{}));
    std::vector<R> results(count);
    const size_t width = std::min(count, static_cast<size_t>(std::max(jobs, 1)));
    if (width <= 1) {
        for (size_t i = 0; i < count; ++i)
            results[i] = f(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < width; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    results[i] = f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
    return results;
}

} // namespace confspace

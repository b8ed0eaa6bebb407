#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace sml {

// Process-wide worker count for embarrassingly parallel loops.
// Results never depend on it: workers only fill disjoint slots by index.
int max_threads();
void set_max_threads(int n);

namespace detail {
int& thread_setting();
}

// Runs fn(i) for i in [0, count). Blocks until done. fn must write results
// only to locations indexed by i; exceptions from fn propagate to the caller.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const int workers = max_threads();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t block = std::max<std::size_t>(1, count / (8 * static_cast<std::size_t>(workers)));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(block);
            if (begin >= count || failed.load(std::memory_order_relaxed)) return;
            const std::size_t end = std::min(count, begin + block);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<int>(workers, static_cast<int>((count + block - 1) / block));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 1; t < spawn; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace sml

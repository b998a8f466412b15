#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace loops {

// Runs fn(0..count-1) on up to jobs worker threads. Callers store results
// by index, so output order never depends on the worker count. The first
// exception thrown by any worker is rethrown after all workers finish.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> workers;
    workers.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace loops

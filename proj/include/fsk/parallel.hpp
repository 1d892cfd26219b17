#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fsk {

// 0 means one worker per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

// Calls body(i) for every i in [0, count) across `workers` threads. Indices
// are handed out in increasing order. The first exception thrown by a body is
// rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (!failed.load(std::memory_order_relaxed)) {
                    const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= count) return;
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        failed = true;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace fsk

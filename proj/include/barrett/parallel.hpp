// parallel.hpp
// Minimal range partitioning over std::thread. Work is handed out in
// fixed-size chunks from an atomic cursor, so uneven per-index cost (the
// Barrett terms grow linearly in k) still balances. Callers write results
// by index, which keeps output independent of the thread count.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace barrett {

// Runs body(lo, hi) over disjoint half-open chunks covering [begin, end).
template <class Body>
void parallel_for(unsigned threads, std::uint64_t begin, std::uint64_t end, Body&& body,
                  std::uint64_t chunk = 256)
{
    if (begin >= end) {
        return;
    }
    threads = std::max(threads, 1u);
    if (threads == 1) {
        body(begin, end);
        return;
    }

    std::atomic<std::uint64_t> cursor{begin};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t lo = cursor.fetch_add(chunk);
                if (lo >= end) {
                    return;
                }
                body(lo, std::min(end, lo + chunk));
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            cursor.store(end);
        }
    };

    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    if (failure) {
        std::rethrow_exception(failure);
    }
}

inline unsigned default_thread_count() noexcept
{
    return std::max(std::thread::hardware_concurrency(), 1u);
}

} // namespace barrett

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vrlab {

/// Worker count for `requested` (0 = hardware concurrency).
inline unsigned resolveThreads(unsigned requested)
{
    if (requested > 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Calls f(i) for every i < count on up to `threads` workers. Each index is
/// visited exactly once; the first exception is rethrown after all workers join.
template <typename F>
void parallelFor(std::size_t count, unsigned threads, F&& f)
{
    threads = std::min<unsigned>(resolveThreads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex errorMutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(errorMutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace vrlab

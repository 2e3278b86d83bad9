#ifndef KROMATIC_SRC_PARALLEL_HPP
#define KROMATIC_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kromatic::detail
{

/// Runs body(i) for i in [0, count); on worker threads when `enabled`.
/// Each index is visited exactly once, so writes to slot i need no locking.
template <typename Body>
void parallel_for(std::size_t count, bool enabled, Body && body)
{
    std::size_t workers = enabled ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers)
                    body(i);
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
            }
        });
    for (auto & t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}

#endif

#ifndef EMTEDGE_PARALLEL_HPP
#define EMTEDGE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace emtedge {

// Runs body(i) for i in [0, n) on up to `workers` threads, in contiguous
// blocks. The first exception thrown by any call is rethrown here.
template <typename Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
    auto const threads = std::min<std::size_t>(std::max(1U, workers), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            auto const begin = n * t / threads;
            auto const end = n * (t + 1) / threads;
            pool.emplace_back([&, begin, end] {
                try {
                    for (std::size_t i = begin; i < end; ++i) {
                        body(i);
                    }
                } catch (...) {
                    std::lock_guard lock(guard);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace emtedge

#endif // EMTEDGE_PARALLEL_HPP

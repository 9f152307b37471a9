#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sincgap {

/**
 * Splits [0, total) into fixed chunks of `chunk` items and runs
 * fn(begin, end) -> Result on up to `jobs` threads. Results come back in
 * chunk order, so any in-order reduction is independent of `jobs`.
 */
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::size_t total, std::size_t chunk, int jobs, Fn&& fn) {
    chunk = std::max<std::size_t>(chunk, 1);
    const std::size_t count = (total + chunk - 1) / chunk;
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= count) {
                return;
            }
            try {
                results[c] = fn(c * chunk, std::min(total, (c + 1) * chunk));
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(count);
                return;
            }
        }
    };

    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

}  // namespace sincgap

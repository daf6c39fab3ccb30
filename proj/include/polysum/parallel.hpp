#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polysum {

// Worker count from POLYSUM_WORKERS, else hardware concurrency.
unsigned worker_count();
void set_worker_count(unsigned n);

// Calls f(begin, end) on disjoint contiguous chunks of [0, n). Runs inline for one worker.
template <class F>
void parallel_chunks(std::size_t n, unsigned workers, F&& f) {
    if (n == 0) return;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers == 1) {
        f(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu;
    std::size_t step = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t b = w * step, e = std::min(n, b + step);
        if (b >= e) break;
        pool.emplace_back([&, b, e] {
            try {
                f(b, e);
            } catch (...) {
                std::lock_guard lk(mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// Dynamic scheduling: f(i) for each i in [0, n), items handed out one at a time.
template <class F>
void parallel_for_each_index(std::size_t n, unsigned workers, F&& f) {
    if (n == 0) return;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::mutex mu;
    std::size_t next = 0;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i;
                {
                    std::lock_guard lk(mu);
                    if (next >= n || err) return;
                    i = next++;
                }
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lk(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace polysum

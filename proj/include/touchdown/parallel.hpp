#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace touchdown {

/// Worker count: hardware concurrency, capped by TOUCHDOWN_CERT_THREADS when set.
int thread_count();

/// Calls body(i) for i in [0, n). Indices are split into contiguous blocks, one per
/// worker; callers write into slot i and reduce afterwards in index order, so the
/// result never depends on the thread count or scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body, int threads = thread_count()) {
    const std::size_t workers = std::min<std::size_t>(threads < 1 ? 1 : threads, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace touchdown

#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace connmass {

inline unsigned worker_count() {
    if (const char* env = std::getenv("CONNMASS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(chunk_index) for chunk_index in [0, chunks). Chunks own disjoint
// output slots and derived seeds, so the result is identical for any worker
// count.
template <class Fn>
void parallel_chunks(std::size_t chunks, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) fn(c);
        return;
    }
    if (workers > chunks) workers = static_cast<unsigned>(chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= chunks) return;
            try {
                fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace connmass

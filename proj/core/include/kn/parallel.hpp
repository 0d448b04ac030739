#pragma once

// Tiny chunked parallel-for used by the table builders.  Work items are
// independent; callers assemble results afterwards in index order so output
// stays deterministic regardless of the job count.

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace kn {

inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (jobs <= 1 || count == 1) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    unsigned workers = jobs;
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    std::mutex err_mu;
    std::exception_ptr first_error;
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = static_cast<std::size_t>(w) * chunk;
        std::size_t hi = lo + chunk < count ? lo + chunk : count;
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t k = lo; k < hi; ++k) body(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace kn

// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace alphaperm {

/// out[i] = fn(begin + i) for i in [0, end - begin), evaluated on up to `jobs`
/// threads. Results are positional, so output order never depends on `jobs`.
/// The first exception thrown by any worker is rethrown.
template <class Fn>
auto parallel_map(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn&& fn) {
    using R = decltype(fn(begin));
    const std::uint64_t count = end > begin ? end - begin : 0;
    std::vector<R> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) out[i] = fn(begin + i);
        return out;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::uint64_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(begin + i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace alphaperm

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace blocksort {

/// 0 means "use every hardware thread".
inline unsigned resolve_threads(unsigned requested) noexcept {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into `chunks` fixed ranges and evaluates `fn(begin, end)`
/// on each, returning the results in chunk order. The partition depends only
/// on `count` and `chunks`, never on the thread count, so merged results are
/// reproducible.
template <typename Fn>
auto map_chunks(std::size_t count, std::size_t chunks, unsigned threads, Fn&& fn) {
    using Result = decltype(fn(std::size_t{}, std::size_t{}));
    chunks = std::max<std::size_t>(1, std::min(chunks, std::max<std::size_t>(count, 1)));
    std::vector<Result> results(chunks);
    auto bounds = [&](std::size_t c) { return count * c / chunks; };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), chunks));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) results[c] = fn(bounds(c), bounds(c + 1));
        return results;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < chunks; c += workers) {
                try {
                    results[c] = fn(bounds(c), bounds(c + 1));
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace blocksort

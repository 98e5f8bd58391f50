#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace ms2c {

/// Runs pred(i) for i in [0, count) and returns an index for which it held.
/// With threads <= 1 this is a plain ascending scan. With more threads the range
/// is interleaved across workers; when deterministic is set the least successful
/// index is returned, otherwise whichever worker succeeds first. The result is
/// independent of evaluation order when deterministic is set.
inline std::optional<std::uint64_t> first_success(std::uint64_t count, int threads, bool deterministic,
                                                  const std::function<bool(std::uint64_t)>& pred) {
    if (threads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        const auto nt = static_cast<std::uint64_t>(threads);
        for (std::uint64_t w = 0; w < nt; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::uint64_t i = w; i < count; i += nt) {
                        const auto b = best.load(std::memory_order_relaxed);
                        if (deterministic ? i > b : b != kNone) return;
                        if (pred(i)) {
                            auto cur = best.load();
                            while (i < cur && !best.compare_exchange_weak(cur, i)) {
                            }
                            return;
                        }
                    }
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    best.store(0);
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
    if (best.load() == kNone) return std::nullopt;
    return best.load();
}

}  // namespace ms2c

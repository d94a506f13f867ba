#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace trifact {

// Least i in [0, count) with pred(i), scanning with `threads` workers.
// Result is the same for any thread count.
template <class Pred>
std::optional<std::size_t> parallel_first(std::size_t count, unsigned threads, Pred pred) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> best{count};
    auto work = [&](unsigned tid) {
        for (std::size_t i = tid; i < count; i += threads) {
            if (i >= best.load(std::memory_order_relaxed)) return;
            if (pred(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    if (best.load() == count) return std::nullopt;
    return best.load();
}

}  // namespace trifact

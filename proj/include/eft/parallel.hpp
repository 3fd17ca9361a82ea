#ifndef EFT_PARALLEL_HPP
#define EFT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace eft {

/// Worker count: EFT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
inline std::size_t default_parallelism() {
    if (const char* env = std::getenv("EFT_THREADS")) {
        try {
            long value = std::stol(env);
            if (value > 0) {
                return static_cast<std::size_t>(value);
            }
        } catch (...) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

template <class Item>
struct FirstMatch {
    std::optional<Item> item;
    // position of `item` in generation order, or the number of items
    // generated when nothing matched
    std::size_t index = 0;
};

/*
 * Pulls items from `next` (bool(Item&), false when exhausted) and returns
 * the first one, in generation order, for which a worker predicate holds.
 * Each thread builds its own predicate via `make_worker()` so scratch state
 * is never shared. The result does not depend on the thread count.
 */
template <class Item, class Next, class MakeWorker>
FirstMatch<Item> find_first(Next&& next, MakeWorker&& make_worker, std::size_t threads,
                            std::size_t chunk = 32) {
    FirstMatch<Item> result;
    if (threads <= 1) {
        auto test = make_worker();
        Item item;
        std::size_t index = 0;
        while (next(item)) {
            if (test(item)) {
                result.item = std::move(item);
                result.index = index;
                return result;
            }
            ++index;
        }
        result.index = index;
        return result;
    }

    std::mutex source_lock;
    std::mutex result_lock;
    std::size_t generated = 0;
    bool exhausted = false;
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    auto work = [&]() {
        auto test = make_worker();
        std::vector<Item> batch;
        for (;;) {
            std::size_t base = 0;
            batch.clear();
            {
                std::lock_guard<std::mutex> guard(source_lock);
                if (exhausted || generated > best.load()) {
                    return;
                }
                base = generated;
                Item item;
                while (batch.size() < chunk && next(item)) {
                    batch.push_back(std::move(item));
                }
                generated += batch.size();
                if (batch.size() < chunk) {
                    exhausted = true;
                }
            }
            for (std::size_t i = 0; i < batch.size(); ++i) {
                if (base + i > best.load()) {
                    break;
                }
                if (test(batch[i])) {
                    std::lock_guard<std::mutex> guard(result_lock);
                    if (base + i < best.load()) {
                        best.store(base + i);
                        result.item = std::move(batch[i]);
                    }
                    break;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(work);
    }
    for (auto& th : pool) {
        th.join();
    }
    result.index = result.item ? best.load() : generated;
    return result;
}

}

#endif /* EFT_PARALLEL_HPP */

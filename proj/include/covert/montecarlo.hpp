#pragma once

#include <covert/rng.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace covert {

/// Runs `trial(index, rng)` for index in [0, trials) across `threads` workers
/// (0 = hardware concurrency). Trial i always gets make_rng(root_seed, i), and
/// results come back indexed by trial, so the output does not depend on scheduling.
template <typename Fn>
auto run_trials(std::size_t trials, std::uint64_t root_seed, unsigned threads, Fn&& trial) {
    using Result = decltype(trial(std::size_t{0}, std::declval<Rng&>()));
    std::vector<Result> results(trials);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
            Rng rng = make_rng(root_seed, i);
            results[i] = trial(i, rng);
        }
    };
    if (threads <= 1) {
        worker();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    pool.clear();
    return results;
}

}  // namespace covert

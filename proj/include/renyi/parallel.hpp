#pragma once

// Worker pool size and deterministic random substreams.
//
// Library code marks parallel regions with parallel_for; each index writes
// only its own slot, so results do not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace renyi {

void set_workers(unsigned n);
unsigned workers();

template <class F>
void parallel_for(std::size_t n, F&& body)
{
    const std::size_t k = std::min<std::size_t>(workers(), n);
    if (k <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
        pool.emplace_back([&body, t, k, n] {
            for (std::size_t i = t; i < n; i += k) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline constexpr const char* rng_name = "splitmix64-keyed mt19937_64, v1";

using rng = std::mt19937_64;

// Independent stream for task `index` under a run seed.
rng substream(std::uint64_t seed, std::uint64_t index);

// Uniform draw from the probability simplex of dimension k.
std::vector<double> dirichlet(rng& g, std::size_t k, double concentration = 1.0);

}  // namespace renyi

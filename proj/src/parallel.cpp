#include "renyi/parallel.hpp"

#include <atomic>

namespace renyi {

namespace {

std::atomic<unsigned> worker_count{1};

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

void set_workers(unsigned n) { worker_count = n == 0 ? 1 : n; }

unsigned workers() { return worker_count; }

rng substream(std::uint64_t seed, std::uint64_t index)
{
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(index));
    std::seed_seq seq{std::uint32_t(a), std::uint32_t(a >> 32), std::uint32_t(b), std::uint32_t(b >> 32)};
    return rng(seq);
}

std::vector<double> dirichlet(rng& g, std::size_t k, double concentration)
{
    std::gamma_distribution<double> gamma(concentration, 1.0);
    std::vector<double> p(k);
    double s = 0.0;
    for (double& x : p) {
        x = gamma(g);
        s += x;
    }
    for (double& x : p) x /= s;
    return p;
}

}  // namespace renyi

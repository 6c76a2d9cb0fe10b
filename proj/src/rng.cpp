#include "koobf/rng.hpp"

#include <algorithm>
#include <cmath>

namespace koobf {

size_t Rng::below(size_t n) {
    // Lemire-style rejection: draw until the value falls inside the largest
    // multiple of n, so every residue is equally likely on every platform.
    uint64_t bound = n;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return static_cast<size_t>(x % bound);
}

std::vector<size_t> Rng::sample_indices(size_t n, size_t m) {
    if (m > n) m = n;
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    // partial Fisher-Yates: the first m entries end up uniformly sampled
    for (size_t i = 0; i < m; ++i) {
        std::swap(idx[i], idx[i + below(n - i)]);
    }
    idx.resize(m);
    std::sort(idx.begin(), idx.end());
    return idx;
}

uint64_t derive_seed(uint64_t global_seed, uint64_t pair_index, uint64_t k) {
    // splitmix64 finalizer over the mixed triple; avalanche keeps streams apart
    uint64_t z = global_seed + 0x9E3779B97F4A7C15ULL * (pair_index + 1) + 0xBF58476D1CE4E5B9ULL * (k + 1);
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

size_t rewrite_budget(double tau, size_t eligible) {
    if (eligible == 0 || tau <= 0.0) return 0;
    auto m = static_cast<size_t>(std::ceil(tau * static_cast<double>(eligible)));
    return m > eligible ? eligible : m;
}

}  // namespace koobf

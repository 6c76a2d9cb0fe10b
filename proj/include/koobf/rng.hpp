#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace koobf {

// mt19937_64 gives a portable bit stream, but the std distributions do not, so
// bounded draws are done by hand. Outputs must be byte-identical across
// platforms for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, n); n > 0. Rejection sampling keeps it unbiased.
    size_t below(size_t n);

    // true with probability num/den
    bool chance(uint32_t num, uint32_t den) { return below(den) < num; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    // Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    // m distinct indices from [0, n), ascending
    std::vector<size_t> sample_indices(size_t n, size_t m);

private:
    std::mt19937_64 gen_;
};

// Stable stream derivation so --jobs N cannot change outputs: each (pair, k)
// gets its own seed from the global one.
uint64_t derive_seed(uint64_t global_seed, uint64_t pair_index, uint64_t k);

// ceil(tau * eligible) capped at eligible; the shared rewrite-budget rule.
size_t rewrite_budget(double tau, size_t eligible);

}  // namespace koobf

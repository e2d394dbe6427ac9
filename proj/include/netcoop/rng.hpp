#pragma once
#include <cstdint>
#include <random>
#include <vector>

// Deterministic randomness. mt19937_64 is bit-specified by the standard, but
// std::uniform_*_distribution is not, so the distribution code lives here:
// same seed => same draws on every platform/compiler.

namespace netcoop {

std::uint64_t splitmix64(std::uint64_t& state);

// decorrelated per-realization seed from (base seed, realization index)
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n), unbiased (rejection sampling); n >= 1
    std::uint64_t bounded(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = gen_();
            if (x >= threshold) return x % n;
        }
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

// k distinct indices from 0..n-1, uniform without replacement (partial
// Fisher-Yates; draw order fixed so results are reproducible)
std::vector<int> sample_without_replacement(int n, int k, Rng& rng);

} // namespace netcoop

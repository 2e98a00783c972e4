#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace widthlab {

/// Stateless stream derivation: SplitMix64 finalizer applied to
/// master + (index+1) * golden-gamma. Same (master, index) gives the same
/// child seed on every platform.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seeded generator with platform-stable output. The engine is mt19937_64,
/// whose sequence is pinned by the C++ standard; bounded integers and reals
/// are derived here from raw 64-bit draws (the std distributions are not
/// portable across standard libraries, so they are never used).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t u64() { return engine_(); }

    /// Uniform in [0, bound) without modulo bias (rejection sampling).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double real01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real01() < p; }

    /// Fisher-Yates, iterating from the back; the draw order is part of the
    /// reproducibility contract.
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace widthlab

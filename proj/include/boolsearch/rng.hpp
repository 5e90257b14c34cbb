#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

namespace boolsearch {

// Seeded generator with platform-independent draws. std::mt19937_64 output is
// fully specified by the standard, the std:: distributions are not, so every
// draw in the library goes through the helpers below.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    std::size_t index(std::size_t size) { return static_cast<std::size_t>(below(size)); }

    // Uniform integer in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return uniform01() < p; }
    bool bit() { return (engine_() >> 63) != 0; }

    // Fisher-Yates over [first, last).
    template <typename It>
    void shuffle(It first, It last)
    {
        const auto count = static_cast<std::size_t>(last - first);
        for (std::size_t i = count; i > 1; --i) {
            const std::size_t j = index(i);
            using std::swap;
            swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace boolsearch

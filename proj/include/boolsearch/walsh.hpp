#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolsearch/truth_table.hpp"

namespace boolsearch {

/// Walsh-Hadamard spectrum: value a is sum over x of (-1)^(f(x) xor a.x).
/// Indices use the same big-endian convention as TruthTable.
class WalshSpectrum {
public:
    WalshSpectrum(int n, std::vector<std::int32_t> values);

    int dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::int32_t operator[](std::size_t a) const noexcept { return values_[a]; }
    std::span<const std::int32_t> values() const noexcept { return values_; }

    std::int32_t max_abs() const noexcept;
    // Number of indices whose magnitude equals max_abs().
    std::size_t num_max_values() const noexcept;
    // Sum of squares; equals 2^(2n) for every Boolean function.
    std::int64_t parseval_sum() const noexcept;

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;

private:
    int n_;
    std::vector<std::int32_t> values_;
};

// In-place butterfly transform over a length-2^k signed vector.
void fast_walsh_hadamard(std::span<std::int32_t> values) noexcept;

WalshSpectrum walsh_transform(const TruthTable& tt);

int nonlinearity(const WalshSpectrum& ws);

struct Balance {
    bool balanced;
    std::size_t hamming_weight;
};

Balance balancedness(const TruthTable& tt);

/// Search fitness nl + (2^n - #max_values) / 2^n, kept as the exact pair
/// (nl, #max_values). Ordering is by nonlinearity first, then by fewer
/// maximal-magnitude spectrum entries.
struct Fitness {
    int dimension = 0;
    int nonlinearity = 0;
    std::uint32_t num_max_values = 0;

    // Only for reporting; comparisons use the exact pair.
    double value() const noexcept;

    friend bool operator==(const Fitness& a, const Fitness& b) noexcept
    {
        return a.nonlinearity == b.nonlinearity && a.num_max_values == b.num_max_values;
    }
    friend std::strong_ordering operator<=>(const Fitness& a, const Fitness& b) noexcept
    {
        if (a.nonlinearity != b.nonlinearity) {
            return a.nonlinearity <=> b.nonlinearity;
        }
        return b.num_max_values <=> a.num_max_values;
    }
};

Fitness fitness(const WalshSpectrum& ws);
// Hot path: no allocation after the first call on a thread.
Fitness fitness(const TruthTable& tt);

struct PropertyReport {
    int nonlinearity;
    bool balanced;
    std::size_t hamming_weight;
    std::int32_t max_abs_walsh;
    std::size_t num_max_values;
    Fitness fitness;
};

PropertyReport analyze(const TruthTable& tt);

} // namespace boolsearch

#pragma once

#include <cstddef>
#include <vector>

#include "boolsearch/bit_vector.hpp"
#include "boolsearch/orbits.hpp"
#include "boolsearch/rng.hpp"
#include "boolsearch/truth_table.hpp"

namespace boolsearch {

// General genotypes cover the whole truth table (2^n bits); rotation-symmetric
// ones carry one bit per orbit (g_n bits).
enum class BitstringMode {
    General,
    RotationSymmetric,
};

std::size_t genotype_length(int n, BitstringMode mode);

struct BitstringGenotype {
    BitVector bits;
    BitstringMode mode = BitstringMode::General;

    friend bool operator==(const BitstringGenotype&, const BitstringGenotype&) = default;
};

// RS mode requires the orbit table for n.
TruthTable decode_bitstring(const BitstringGenotype& g, int n, const OrbitTable* orbits);

/// Real-valued genotype. Each value in [0, 1] stands for `decode` bits, so
/// values.size() * decode must equal the target bitstring length.
struct FloatGenotype {
    std::vector<double> values;
    int decode = 3;
    BitstringMode mode = BitstringMode::RotationSymmetric;

    std::size_t dimension() const noexcept { return values.size(); }

    friend bool operator==(const FloatGenotype&, const FloatGenotype&) = default;
};

// Throws unless decode > 0, every value lies in [0, 1] and
// dimension * decode == genotype_length(n, mode).
void validate_float_genotype(const FloatGenotype& g, int n);

// Each value d maps to floor(d * 2^decode), with d = 1 clamped to
// 2^decode - 1, written MSB first; the chunks are concatenated in order.
BitVector decode_float(const FloatGenotype& g);

TruthTable decode_float_genotype(const FloatGenotype& g, int n, const OrbitTable* orbits);

BitstringGenotype random_bitstring(int n, BitstringMode mode, Rng& rng);
FloatGenotype random_float(std::size_t dimension, int decode, BitstringMode mode, Rng& rng);

} // namespace boolsearch

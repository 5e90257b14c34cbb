#pragma once

#include <cstddef>

#include "boolsearch/genotype.hpp"
#include "boolsearch/gp_tree.hpp"
#include "boolsearch/rng.hpp"

namespace boolsearch {

// --- bitstring ---------------------------------------------------------------

void flip_bit_mutation(BitVector& bits, std::size_t position);
// Permutes bits[start..end] (inclusive) in place.
void shuffle_mutation(BitVector& bits, std::size_t start, std::size_t end, Rng& rng);
// a[0, breakpoint) followed by b[breakpoint, size).
BitVector one_point_crossover(const BitVector& a, const BitVector& b, std::size_t breakpoint);
BitVector uniform_crossover(const BitVector& a, const BitVector& b, Rng& rng);

// Picks simple bit mutation or shuffle mutation with equal probability.
BitstringGenotype mutate_bitstring(const BitstringGenotype& g, Rng& rng);
// Picks one-point or uniform crossover with equal probability.
BitstringGenotype crossover_bitstring(const BitstringGenotype& a, const BitstringGenotype& b, Rng& rng);

// --- floating point ----------------------------------------------------------

// Resamples one coordinate.
FloatGenotype mutate_float(const FloatGenotype& g, Rng& rng);
// Arithmetic (coordinate mean) or uniform crossover, chosen at random.
FloatGenotype crossover_float(const FloatGenotype& a, const FloatGenotype& b, Rng& rng);

// --- expression trees --------------------------------------------------------

enum class TreeCrossover {
    Simple,
    Uniform,
    SizeFair,
    OnePoint,
    ContextPreserving,
};

inline constexpr int kTreeRetries = 5;

// Replaces a uniformly chosen node's subtree with a random grow-method subtree
// that fits the depth limit.
GpTree mutate_tree(const GpTree& t, int n, const TreeLimits& limits, Rng& rng);
GpTree crossover_tree(const GpTree& a, const GpTree& b, TreeCrossover kind, const TreeLimits& limits, Rng& rng);
// Uniform choice among the five crossover operators.
GpTree crossover_tree(const GpTree& a, const GpTree& b, const TreeLimits& limits, Rng& rng);

bool within_limits(const GpTree& t, const TreeLimits& limits);

} // namespace boolsearch

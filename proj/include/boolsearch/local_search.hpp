#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "boolsearch/problem.hpp"

namespace boolsearch {

enum class LsVariant {
    None,
    Mutation, // LS1
    BitFlip,  // LS2
    Both,     // LS3: LS1 then LS2
};

std::string_view ls_name(LsVariant v) noexcept; // "none", "ls1", "ls2", "ls3"
LsVariant parse_ls_variant(std::string_view name);

struct LsConfig {
    LsVariant variant = LsVariant::None;
    double fraction = 0.05;
    unsigned trials = 25;
    // Steady-state steps between applications; 0 means one generation,
    // i.e. population_size steps.
    std::size_t period = 0;
};

void validate(const LsConfig& cfg);

/// LS1: mutate the current solution until `trials` consecutive mutants fail
/// to improve it strictly; every improvement is adopted at once and resets
/// the counter. Returns early, keeping the best so far, when the evaluator
/// stops.
Individual ls_mutation(Individual ind, unsigned trials, Evaluator& evaluator, Rng& rng);

/// LS2: sweep the bit positions in ascending order, keeping every flip that
/// strictly improves fitness, until a whole sweep changes nothing. The result
/// is 1-flip optimal unless the evaluator stopped the sweep. Bitstring
/// genotypes only.
Individual ls_bitflip(Individual ind, Evaluator& evaluator);

Individual apply_variant(Individual ind, const LsConfig& cfg, Evaluator& evaluator, Rng& rng);

// The best individual plus ceil(fraction * size) - 1 distinct others drawn
// uniformly, best first.
std::vector<std::size_t> select_for_ls(const Population& pop, double fraction, Rng& rng);

// Runs the configured variant on the selected individuals in place.
void apply_ls(Population& pop, const LsConfig& cfg, Evaluator& evaluator, Rng& rng);

} // namespace boolsearch

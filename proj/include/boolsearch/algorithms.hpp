#pragma once

#include <array>
#include <cstddef>

#include "boolsearch/problem.hpp"

namespace boolsearch {

inline constexpr std::size_t kTournamentSize = 3;

struct SstParams {
    double p_mut = 0.5;
};

// Worst of the drawn individuals; on equal fitness the later draw loses.
std::size_t tournament_loser(const Population& pop, const std::array<std::size_t, kTournamentSize>& drawn);

/// One steady-state 3-tournament elimination step: draw three distinct
/// individuals, drop the worst, cross the other two into one child, mutate
/// it with probability p_mut, evaluate it and put it in the vacated slot.
/// Returns the slot that was replaced.
std::size_t sst_step(Population& pop, const SstParams& params, Evaluator& evaluator, Rng& rng);

struct DeParams {
    double scale = 0.5;          // F
    double crossover_rate = 0.9; // CR
    std::size_t population_size = 50;
};

// rand/1/bin trial vector: base + F (diff1 - diff2), binomial crossover with
// the target using rate CR and one forced coordinate, clipped to [0, 1].
FloatGenotype de_trial(const FloatGenotype& target, const FloatGenotype& base, const FloatGenotype& diff1,
    const FloatGenotype& diff2, double scale, double crossover_rate, Rng& rng);

/// One DE generation over a float population. Each target is replaced by its
/// trial when the trial is at least as fit. Stops early when the evaluator
/// says so. Throws if the population has fewer than four members.
void de_step(Population& pop, const DeParams& params, Evaluator& evaluator, Rng& rng);

} // namespace boolsearch

#include "boolsearch/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolsearch {

std::size_t tournament_loser(const Population& pop, const std::array<std::size_t, kTournamentSize>& drawn)
{
    std::size_t loser = drawn[0];
    for (std::size_t k = 1; k < drawn.size(); ++k) {
        if (pop[drawn[k]].fitness <= pop[loser].fitness) {
            loser = drawn[k];
        }
    }
    return loser;
}

std::size_t sst_step(Population& pop, const SstParams& params, Evaluator& evaluator, Rng& rng)
{
    if (pop.size() < kTournamentSize) {
        throw std::invalid_argument("steady-state tournament needs at least three individuals");
    }
    std::array<std::size_t, kTournamentSize> drawn{};
    for (std::size_t k = 0; k < drawn.size(); ++k) {
        std::size_t pick = 0;
        do {
            pick = rng.index(pop.size());
        } while (std::find(drawn.begin(), drawn.begin() + static_cast<std::ptrdiff_t>(k), pick)
            != drawn.begin() + static_cast<std::ptrdiff_t>(k));
        drawn[k] = pick;
    }
    const std::size_t loser = tournament_loser(pop, drawn);
    std::array<std::size_t, 2> parents{};
    std::size_t p = 0;
    for (auto idx : drawn) {
        if (idx != loser) {
            parents[p++] = idx;
        }
    }

    const Problem& problem = evaluator.problem();
    Genotype child = problem.crossover(pop[parents[0]].genotype, pop[parents[1]].genotype, rng);
    if (rng.coin(params.p_mut)) {
        child = problem.mutate(child, rng);
    }
    pop[loser] = evaluator.make_individual(std::move(child));
    return loser;
}

FloatGenotype de_trial(const FloatGenotype& target, const FloatGenotype& base, const FloatGenotype& diff1,
    const FloatGenotype& diff2, double scale, double crossover_rate, Rng& rng)
{
    const std::size_t dim = target.values.size();
    if (base.values.size() != dim || diff1.values.size() != dim || diff2.values.size() != dim) {
        throw std::invalid_argument("differential evolution vectors differ in dimension");
    }
    FloatGenotype trial = target;
    const std::size_t forced = rng.index(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (j == forced || rng.coin(crossover_rate)) {
            const double mutant = base.values[j] + scale * (diff1.values[j] - diff2.values[j]);
            trial.values[j] = std::clamp(mutant, 0.0, 1.0);
        }
    }
    return trial;
}

void de_step(Population& pop, const DeParams& params, Evaluator& evaluator, Rng& rng)
{
    if (pop.size() < 4) {
        throw std::invalid_argument("differential evolution needs at least four individuals");
    }
    const Population current = pop;
    for (std::size_t i = 0; i < current.size() && !evaluator.should_stop(); ++i) {
        std::array<std::size_t, 3> picks{};
        for (std::size_t k = 0; k < picks.size(); ++k) {
            std::size_t pick = 0;
            do {
                pick = rng.index(current.size());
            } while (pick == i
                || std::find(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(k), pick)
                    != picks.begin() + static_cast<std::ptrdiff_t>(k));
            picks[k] = pick;
        }
        const auto& target = std::get<FloatGenotype>(current[i].genotype);
        FloatGenotype trial = de_trial(target, std::get<FloatGenotype>(current[picks[0]].genotype),
            std::get<FloatGenotype>(current[picks[1]].genotype), std::get<FloatGenotype>(current[picks[2]].genotype),
            params.scale, params.crossover_rate, rng);
        Individual candidate = evaluator.make_individual(std::move(trial));
        if (candidate.fitness >= current[i].fitness) {
            pop[i] = std::move(candidate);
        }
    }
}

} // namespace boolsearch

#include "boolsearch/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace boolsearch {

std::string_view ls_name(LsVariant v) noexcept
{
    switch (v) {
    case LsVariant::None:
        return "none";
    case LsVariant::Mutation:
        return "ls1";
    case LsVariant::BitFlip:
        return "ls2";
    case LsVariant::Both:
        return "ls3";
    }
    return "none";
}

LsVariant parse_ls_variant(std::string_view name)
{
    for (auto v : {LsVariant::None, LsVariant::Mutation, LsVariant::BitFlip, LsVariant::Both}) {
        if (ls_name(v) == name) {
            return v;
        }
    }
    throw std::invalid_argument("unknown local search variant '" + std::string(name) + "'");
}

void validate(const LsConfig& cfg)
{
    if (!(cfg.fraction > 0.0 && cfg.fraction <= 1.0)) {
        throw std::invalid_argument("local search fraction must lie in (0, 1]");
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("local search needs at least one trial");
    }
}

Individual ls_mutation(Individual ind, unsigned trials, Evaluator& evaluator, Rng& rng)
{
    const Problem& problem = evaluator.problem();
    unsigned failures = 0;
    while (failures < trials && !evaluator.should_stop()) {
        Genotype candidate = problem.mutate(ind.genotype, rng);
        const Fitness fit = evaluator.evaluate(candidate);
        if (fit > ind.fitness) {
            ind = Individual{std::move(candidate), fit};
            failures = 0;
        } else {
            ++failures;
        }
    }
    return ind;
}

Individual ls_bitflip(Individual ind, Evaluator& evaluator)
{
    auto* genotype = std::get_if<BitstringGenotype>(&ind.genotype);
    if (genotype == nullptr) {
        throw std::invalid_argument("bit-flip local search needs a bitstring genotype");
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < genotype->bits.size(); ++i) {
            if (evaluator.should_stop()) {
                return ind;
            }
            genotype->bits.flip(i);
            const Fitness fit = evaluator.evaluate(ind.genotype);
            if (fit > ind.fitness) {
                ind.fitness = fit;
                improved = true;
            } else {
                genotype->bits.flip(i);
            }
        }
    }
    return ind;
}

Individual apply_variant(Individual ind, const LsConfig& cfg, Evaluator& evaluator, Rng& rng)
{
    switch (cfg.variant) {
    case LsVariant::None:
        return ind;
    case LsVariant::Mutation:
        return ls_mutation(std::move(ind), cfg.trials, evaluator, rng);
    case LsVariant::BitFlip:
        return ls_bitflip(std::move(ind), evaluator);
    case LsVariant::Both:
        return ls_bitflip(ls_mutation(std::move(ind), cfg.trials, evaluator, rng), evaluator);
    }
    return ind;
}

std::vector<std::size_t> select_for_ls(const Population& pop, double fraction, Rng& rng)
{
    if (pop.empty()) {
        return {};
    }
    const double wanted = std::ceil(fraction * static_cast<double>(pop.size()) - 1e-9);
    const std::size_t count = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(wanted, 1.0)), 1, pop.size());
    const std::size_t best = best_index(pop);

    std::vector<std::size_t> others(pop.size() - 1);
    std::iota(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(best), std::size_t{0});
    std::iota(others.begin() + static_cast<std::ptrdiff_t>(best), others.end(), best + 1);
    // Partial Fisher-Yates for the first count - 1 slots.
    std::vector<std::size_t> chosen{best};
    for (std::size_t k = 0; k + 1 < count; ++k) {
        const std::size_t j = k + rng.index(others.size() - k);
        std::swap(others[k], others[j]);
        chosen.push_back(others[k]);
    }
    return chosen;
}

void apply_ls(Population& pop, const LsConfig& cfg, Evaluator& evaluator, Rng& rng)
{
    if (cfg.variant == LsVariant::None) {
        return;
    }
    for (std::size_t idx : select_for_ls(pop, cfg.fraction, rng)) {
        if (evaluator.should_stop()) {
            return;
        }
        pop[idx] = apply_variant(std::move(pop[idx]), cfg, evaluator, rng);
    }
}

} // namespace boolsearch

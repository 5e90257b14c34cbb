#include "boolsearch/run.hpp"

#include "boolsearch/orbits.hpp"

namespace boolsearch {

std::string_view encoding_name(Encoding e) noexcept
{
    switch (e) {
    case Encoding::Bitstring:
        return "tt";
    case Encoding::FloatingPoint:
        return "fp";
    case Encoding::Tree:
        return "gp";
    }
    return "tt";
}

Encoding parse_encoding(std::string_view name)
{
    for (auto e : {Encoding::Bitstring, Encoding::FloatingPoint, Encoding::Tree}) {
        if (encoding_name(e) == name) {
            return e;
        }
    }
    throw ConfigError("unknown encoding '" + std::string(name) + "' (expected tt, fp or gp)");
}

std::string_view algorithm_name(Algorithm a) noexcept
{
    return a == Algorithm::Sst ? "sst" : "de";
}

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "sst") {
        return Algorithm::Sst;
    }
    if (name == "de") {
        return Algorithm::DifferentialEvolution;
    }
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected sst or de)");
}

std::string_view stop_reason_name(StopReason r) noexcept
{
    switch (r) {
    case StopReason::Budget:
        return "budget";
    case StopReason::Target:
        return "target";
    case StopReason::TimeLimit:
        return "time";
    }
    return "budget";
}

StopReason parse_stop_reason(std::string_view name)
{
    for (auto r : {StopReason::Budget, StopReason::Target, StopReason::TimeLimit}) {
        if (stop_reason_name(r) == name) {
            return r;
        }
    }
    throw std::invalid_argument("unknown stop reason '" + std::string(name) + "'");
}

std::string RunConfig::label() const
{
    std::string out;
    switch (encoding) {
    case Encoding::Bitstring:
        out = "TT";
        break;
    case Encoding::FloatingPoint:
        out = "FP";
        break;
    case Encoding::Tree:
        out = "GP";
        break;
    }
    if (rotation_symmetric) {
        out += "-RI";
    }
    if (encoding == Encoding::FloatingPoint) {
        out += algorithm == Algorithm::Sst ? "-SST" : "-DE";
    }
    if (ls.variant != LsVariant::None) {
        out += '-';
        for (char c : ls_name(ls.variant)) {
            out += static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
        }
    }
    return out;
}

void RunConfig::validate() const
{
    if (n < kMinDimension || n > kMaxDimension) {
        throw ConfigError("n must lie in " + std::to_string(kMinDimension) + ".." + std::to_string(kMaxDimension));
    }
    if (!(p_mut >= 0.0 && p_mut <= 1.0)) {
        throw ConfigError("p_mut must lie in [0, 1]");
    }
    if (algorithm == Algorithm::Sst && population_size < kTournamentSize) {
        throw ConfigError("population size must be at least the tournament size (3)");
    }
    if (algorithm == Algorithm::DifferentialEvolution) {
        if (encoding != Encoding::FloatingPoint) {
            throw ConfigError("differential evolution needs the floating-point encoding");
        }
        if (de.population_size < 4) {
            throw ConfigError("differential evolution needs a population of at least 4");
        }
        if (!(de.scale >= 0.0) || !(de.crossover_rate >= 0.0 && de.crossover_rate <= 1.0)) {
            throw ConfigError("DE needs F >= 0 and CR in [0, 1]");
        }
    }
    if (encoding == Encoding::Tree) {
        if (rotation_symmetric) {
            throw ConfigError("the tree encoding cannot be restricted to rotation-symmetric functions");
        }
        if (tree.max_depth < 1 || tree.max_nodes < 1) {
            throw ConfigError("tree depth and node limits must be positive");
        }
    }
    if (encoding == Encoding::FloatingPoint) {
        const std::size_t target = genotype_length(n, mode());
        if (decode < 1 || decode > 30 || target % static_cast<std::size_t>(decode) != 0) {
            throw ConfigError("decode = " + std::to_string(decode) + " does not divide the genotype length "
                + std::to_string(target) + " for n = " + std::to_string(n)
                + (rotation_symmetric ? " (rotation-symmetric)" : " (general)"));
        }
    }
    if ((ls.variant == LsVariant::BitFlip || ls.variant == LsVariant::Both) && encoding != Encoding::Bitstring) {
        throw ConfigError("bit-flip local search (ls2, ls3) needs the bitstring encoding");
    }
    try {
        boolsearch::validate(ls);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (time_limit_seconds && !(*time_limit_seconds > 0.0)) {
        throw ConfigError("time limit must be positive");
    }
}

RunRecord run(const RunConfig& cfg, std::size_t run_index)
{
    cfg.validate();
    const Problem problem(cfg.n, cfg.encoding, cfg.mode(), cfg.decode, cfg.tree);
    Rng rng(cfg.seed);
    Evaluator evaluator(problem,
        RunLimits{
            .evaluation_budget = cfg.evaluation_budget,
            .target_nonlinearity = cfg.target_nonlinearity,
            .time_limit_seconds = cfg.time_limit_seconds,
        });

    const bool de = cfg.algorithm == Algorithm::DifferentialEvolution;
    const std::size_t pop_size = de ? cfg.de.population_size : cfg.population_size;
    Population pop;
    pop.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        pop.push_back(evaluator.make_individual(problem.random(rng)));
    }

    const bool with_ls = cfg.ls.variant != LsVariant::None;
    if (de) {
        while (!evaluator.should_stop()) {
            de_step(pop, cfg.de, evaluator, rng);
            if (with_ls) {
                apply_ls(pop, cfg.ls, evaluator, rng);
            }
        }
    } else {
        const SstParams params{cfg.p_mut};
        const std::size_t period = cfg.ls.period != 0 ? cfg.ls.period : pop_size;
        std::uint64_t steps = 0;
        while (!evaluator.should_stop()) {
            sst_step(pop, params, evaluator, rng);
            ++steps;
            if (with_ls && steps % period == 0) {
                apply_ls(pop, cfg.ls, evaluator, rng);
            }
        }
    }

    const Individual& best = evaluator.best();
    const TruthTable tt = problem.decode(best.genotype);
    RunRecord record;
    record.label = cfg.label();
    record.run_index = run_index;
    record.config = cfg;
    record.evaluations = evaluator.evaluations();
    record.stop_reason = evaluator.stop_reason().value_or(StopReason::Budget);
    record.best = best.fitness;
    record.best_genotype = genotype_text(best.genotype);
    record.truth_table_hex = tt.to_hex();
    record.rotation_symmetric = is_rotation_symmetric(tt);
    record.trajectory = evaluator.trajectory();
    record.elapsed_seconds = evaluator.elapsed_seconds();
    return record;
}

} // namespace boolsearch

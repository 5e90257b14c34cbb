#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <thread>

#include "boolsearch/algorithms.hpp"
#include "boolsearch/operators.hpp"
#include "boolsearch/run.hpp"

using namespace boolsearch;

namespace {

Individual with_fitness(int nl, std::uint32_t num_max)
{
    return Individual{BitstringGenotype{BitVector(8), BitstringMode::General}, Fitness{3, nl, num_max}};
}

Fitness population_max(const Population& pop) { return pop[best_index(pop)].fitness; }

} // namespace

TEST_CASE("bit mutations")
{
    BitVector bits(4);
    flip_bit_mutation(bits, 2);
    CHECK(bits.to_string() == "0010");

    Rng rng(1);
    for (int rep = 0; rep < 200; ++rep) {
        const BitstringGenotype zero{BitVector(64), BitstringMode::General};
        const auto m = mutate_bitstring(zero, rng);
        // Shuffling a constant string leaves it unchanged; a flip sets one bit.
        CHECK(m.bits.count() <= 1);
        CHECK(m.bits.size() == 64);
    }

    auto g = BitVector::from_string("1101001110");
    const auto ones = g.count();
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t a = rng.index(g.size());
        const std::size_t b = rng.index(g.size());
        shuffle_mutation(g, std::min(a, b), std::max(a, b), rng);
        CHECK(g.count() == ones);
    }
    const auto before = g;
    shuffle_mutation(g, 4, 4, rng);
    CHECK(g == before);
}

TEST_CASE("shuffle only touches its window")
{
    Rng rng(2);
    const auto start = BitVector::from_string("1111000011110000");
    for (int rep = 0; rep < 50; ++rep) {
        auto g = start;
        shuffle_mutation(g, 4, 11, rng);
        for (std::size_t i : {0, 1, 2, 3, 12, 13, 14, 15}) {
            CHECK(g.get(i) == start.get(i));
        }
    }
}

TEST_CASE("bitstring crossover")
{
    CHECK(one_point_crossover(BitVector::from_string("0000"), BitVector::from_string("1111"), 2).to_string() == "0011");
    Rng rng(3);
    const auto g = BitVector::from_string("0110100110010110");
    CHECK(uniform_crossover(g, g, rng) == g);

    const auto a = BitVector::from_string("0000111100001111");
    const auto b = BitVector::from_string("0101010101010101");
    for (int rep = 0; rep < 100; ++rep) {
        const auto child = crossover_bitstring(
            BitstringGenotype{a, BitstringMode::General}, BitstringGenotype{b, BitstringMode::General}, rng);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK((child.bits.get(i) == a.get(i) || child.bits.get(i) == b.get(i)));
        }
    }
}

TEST_CASE("float operators")
{
    Rng rng(4);
    const FloatGenotype g{{0.1, 0.2, 0.3, 0.4, 0.5}, 2, BitstringMode::General};
    for (int rep = 0; rep < 100; ++rep) {
        const auto m = mutate_float(g, rng);
        int changed = 0;
        for (std::size_t i = 0; i < g.values.size(); ++i) {
            changed += m.values[i] != g.values[i];
            CHECK(m.values[i] >= 0.0);
            CHECK(m.values[i] <= 1.0);
        }
        CHECK(changed <= 1); // the resampled value may coincide
        CHECK(crossover_float(g, g, rng) == g);
        const FloatGenotype other{{0.9, 0.0, 1.0, 0.7, 0.2}, 2, BitstringMode::General};
        const auto child = crossover_float(g, other, rng);
        for (double d : child.values) {
            CHECK(d >= 0.0);
            CHECK(d <= 1.0);
        }
    }
}

TEST_CASE("tree operators keep the limits")
{
    Rng rng(6);
    const TreeLimits limits{7, 100};
    const auto kinds = {TreeCrossover::Simple, TreeCrossover::Uniform, TreeCrossover::SizeFair,
        TreeCrossover::OnePoint, TreeCrossover::ContextPreserving};
    for (int rep = 0; rep < 100; ++rep) {
        const auto a = random_tree(7, limits, rng);
        const auto b = random_tree(7, limits, rng);
        for (auto kind : kinds) {
            const auto child = crossover_tree(a, b, kind, limits, rng);
            CHECK(within_limits(child, limits));
            CHECK(child.max_variable() < 7);
        }
        const auto m = mutate_tree(a, 7, limits, rng);
        CHECK(within_limits(m, limits));
        CHECK(m.max_variable() < 7);
    }

    const auto leaf = GpTree::parse("x3");
    for (auto kind : kinds) {
        CHECK(crossover_tree(leaf, leaf, kind, limits, rng) == leaf);
    }
}

TEST_CASE("tree crossover produces material from both parents")
{
    Rng rng(7);
    const TreeLimits limits{7, 500};
    const auto a = GpTree::parse("AND(OR(x1, x2), XOR(x3, x4))");
    const auto b = GpTree::parse("XNOR(AND2(x5, x6), IF(x7, x5, x6))");
    for (auto kind : {TreeCrossover::Simple, TreeCrossover::Uniform, TreeCrossover::SizeFair,
             TreeCrossover::OnePoint, TreeCrossover::ContextPreserving}) {
        bool mixed = false;
        for (int rep = 0; rep < 50 && !mixed; ++rep) {
            const auto child = crossover_tree(a, b, kind, limits, rng);
            mixed = child != a && child != b;
        }
        CHECK(mixed);
    }
}

TEST_CASE("tournament loser")
{
    Population pop{with_fitness(5, 1), with_fitness(3, 2), with_fitness(7, 0)};
    CHECK(tournament_loser(pop, {0, 1, 2}) == 1);
    pop = {with_fitness(3, 2), with_fitness(5, 1), with_fitness(3, 2)};
    CHECK(tournament_loser(pop, {0, 1, 2}) == 2);
    CHECK(tournament_loser(pop, {2, 1, 0}) == 0);
    // More maximal spectrum values is worse at equal nonlinearity.
    pop = {with_fitness(3, 2), with_fitness(3, 5), with_fitness(3, 1)};
    CHECK(tournament_loser(pop, {0, 1, 2}) == 1);
}

TEST_CASE("steady-state steps")
{
    const Problem problem(6, Encoding::Bitstring, BitstringMode::General);
    Evaluator evaluator(problem, RunLimits{100000, {}, {}});
    Rng rng(9);
    Population pop;
    for (int i = 0; i < 20; ++i) {
        pop.push_back(evaluator.make_individual(problem.random(rng)));
    }
    Fitness best = population_max(pop);
    for (int step = 0; step < 2000; ++step) {
        sst_step(pop, SstParams{0.5}, evaluator, rng);
        CHECK(pop.size() == 20);
        const Fitness now = population_max(pop);
        CHECK(now >= best);
        best = now;
    }
    CHECK(evaluator.evaluations() == 20 + 2000);
    for (const auto& ind : pop) {
        CHECK(ind.fitness == fitness(problem.decode(ind.genotype)));
    }
}

TEST_CASE("clone population stays cloned without mutation")
{
    const Problem problem(5, Encoding::Bitstring, BitstringMode::General);
    Evaluator evaluator(problem, RunLimits{});
    Rng rng(10);
    const auto g = problem.random(rng);
    Population pop;
    for (int i = 0; i < 5; ++i) {
        pop.push_back(evaluator.make_individual(g));
    }
    for (int step = 0; step < 50; ++step) {
        const auto slot = sst_step(pop, SstParams{0.0}, evaluator, rng);
        CHECK(std::get<BitstringGenotype>(pop[slot].genotype) == std::get<BitstringGenotype>(g));
    }
}

TEST_CASE("differential evolution")
{
    Rng rng(11);
    const FloatGenotype target{{0.1, 0.1, 0.1}, 1, BitstringMode::General};
    const FloatGenotype base{{0.2, 0.4, 0.6}, 1, BitstringMode::General};
    const FloatGenotype d1{{1.0, 1.0, 1.0}, 1, BitstringMode::General};
    const FloatGenotype d2{{0.0, 0.0, 0.0}, 1, BitstringMode::General};
    CHECK(de_trial(target, base, d1, d2, 0.0, 1.0, rng) == base);
    const auto clipped = de_trial(target, base, d1, d2, 2.0, 1.0, rng);
    CHECK(clipped.values == std::vector<double>{1.0, 1.0, 1.0});
    // CR = 0 still takes exactly one coordinate from the mutant.
    const auto one = de_trial(target, base, d1, d2, 0.0, 0.0, rng);
    int from_base = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        from_base += one.values[j] == base.values[j];
    }
    CHECK(from_base == 1);

    const Problem problem(7, Encoding::FloatingPoint, BitstringMode::RotationSymmetric, 2);
    Evaluator evaluator(problem, RunLimits{100000, {}, {}});
    Population pop;
    for (int i = 0; i < 10; ++i) {
        pop.push_back(evaluator.make_individual(problem.random(rng)));
    }
    for (int gen = 0; gen < 30; ++gen) {
        const Population before = pop;
        de_step(pop, DeParams{}, evaluator, rng);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            CHECK(pop[i].fitness >= before[i].fitness);
            for (double d : std::get<FloatGenotype>(pop[i].genotype).values) {
                CHECK(d >= 0.0);
                CHECK(d <= 1.0);
            }
        }
    }
    CHECK(evaluator.evaluations() == 10 + 30 * 10);
    Population tiny(pop.begin(), pop.begin() + 3);
    CHECK_THROWS(de_step(tiny, DeParams{}, evaluator, rng));
}

TEST_CASE("evaluator stop rules")
{
    const Problem problem(3, Encoding::Bitstring, BitstringMode::General);
    Rng rng(12);
    Evaluator budget(problem, RunLimits{3, {}, {}});
    budget.evaluate(problem.random(rng));
    budget.evaluate(problem.random(rng));
    CHECK_FALSE(budget.should_stop());
    budget.evaluate(problem.random(rng));
    CHECK(budget.stop_reason() == StopReason::Budget);

    Evaluator target(problem, RunLimits{1000, 0, {}});
    target.evaluate(problem.random(rng));
    CHECK(target.stop_reason() == StopReason::Target);

    // The clock is only read every kClockInterval evaluations.
    Evaluator timed(problem, RunLimits{1'000'000, {}, 0.02});
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    for (std::uint64_t i = 0; i < Evaluator::kClockInterval; ++i) {
        CHECK_FALSE(timed.should_stop());
        timed.evaluate(problem.random(rng));
    }
    CHECK(timed.stop_reason() == StopReason::TimeLimit);
}

TEST_CASE("runs")
{
    RunConfig cfg;
    cfg.n = 5;
    cfg.population_size = 30;
    cfg.evaluation_budget = 0;
    cfg.seed = 4;
    auto r = run(cfg);
    CHECK(r.evaluations == 30);
    CHECK(r.stop_reason == StopReason::Budget);
    CHECK(r.label == "TT");

    cfg.evaluation_budget = 5000;
    r = run(cfg);
    CHECK(r.evaluations == 5000);
    CHECK(r.best == fitness(TruthTable::from_hex(5, r.truth_table_hex)));
    CHECK(!r.trajectory.empty());
    CHECK(r.trajectory.back().fitness == r.best);
    for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
        CHECK(r.trajectory[i].fitness > r.trajectory[i - 1].fitness);
        CHECK(r.trajectory[i].evaluations > r.trajectory[i - 1].evaluations);
    }

    const auto again = run(cfg);
    CHECK(again.truth_table_hex == r.truth_table_hex);
    CHECK(again.best_genotype == r.best_genotype);
    CHECK(again.evaluations == r.evaluations);

    cfg.n = 7;
    cfg.encoding = Encoding::Tree;
    cfg.population_size = 500;
    cfg.evaluation_budget = 1'000'000;
    cfg.target_nonlinearity = 56;
    r = run(cfg);
    CHECK(r.label == "GP");
    CHECK(r.stop_reason == StopReason::Target);
    CHECK(r.best.nonlinearity == 56);
}

TEST_CASE("labels")
{
    RunConfig cfg;
    CHECK(cfg.label() == "TT");
    cfg.rotation_symmetric = true;
    cfg.ls.variant = LsVariant::Mutation;
    CHECK(cfg.label() == "TT-RI-LS1");
    cfg.rotation_symmetric = false;
    cfg.ls.variant = LsVariant::BitFlip;
    CHECK(cfg.label() == "TT-LS2");
    cfg.ls.variant = LsVariant::None;
    cfg.encoding = Encoding::FloatingPoint;
    CHECK(cfg.label() == "FP-SST");
    cfg.algorithm = Algorithm::DifferentialEvolution;
    CHECK(cfg.label() == "FP-DE");
    cfg.encoding = Encoding::Tree;
    cfg.algorithm = Algorithm::Sst;
    CHECK(cfg.label() == "GP");
}

TEST_CASE("configuration validation")
{
    auto invalid = [](auto edit) {
        RunConfig cfg;
        edit(cfg);
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
    };
    invalid([](RunConfig& c) { c.n = 0; });
    invalid([](RunConfig& c) { c.p_mut = 1.5; });
    invalid([](RunConfig& c) { c.population_size = 2; });
    invalid([](RunConfig& c) { c.algorithm = Algorithm::DifferentialEvolution; });
    invalid([](RunConfig& c) {
        c.encoding = Encoding::Tree;
        c.rotation_symmetric = true;
    });
    invalid([](RunConfig& c) {
        c.encoding = Encoding::FloatingPoint;
        c.rotation_symmetric = true; // 20 orbits, decode 3
    });
    invalid([](RunConfig& c) {
        c.encoding = Encoding::Tree;
        c.ls.variant = LsVariant::BitFlip;
    });
    invalid([](RunConfig& c) { c.ls.fraction = 0.0; });
    invalid([](RunConfig& c) { c.time_limit_seconds = -1.0; });
    CHECK_THROWS_AS(parse_encoding("xx"), ConfigError);
    CHECK(parse_algorithm("de") == Algorithm::DifferentialEvolution);
    CHECK_NOTHROW(RunConfig{}.validate());
}

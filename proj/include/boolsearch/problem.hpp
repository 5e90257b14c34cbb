#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boolsearch/genotype.hpp"
#include "boolsearch/gp_tree.hpp"
#include "boolsearch/orbits.hpp"
#include "boolsearch/rng.hpp"
#include "boolsearch/walsh.hpp"

namespace boolsearch {

enum class Encoding {
    Bitstring,
    FloatingPoint,
    Tree,
};

using Genotype = std::variant<BitstringGenotype, FloatGenotype, GpTree>;

// Text used in result files: hex for bitstrings, prefix form for trees and a
// comma-separated decimal list for float vectors.
std::string genotype_text(const Genotype& g);

/// Everything needed to create, vary and decode genotypes of one encoding
/// for one dimension.
class Problem {
public:
    Problem(int n, Encoding encoding, BitstringMode mode, int decode = 3, TreeLimits limits = {});

    int dimension() const noexcept { return n_; }
    Encoding encoding() const noexcept { return encoding_; }
    BitstringMode mode() const noexcept { return mode_; }
    int decode() const noexcept { return decode_; }
    const TreeLimits& tree_limits() const noexcept { return limits_; }
    const OrbitTable* orbits() const noexcept { return orbits_.get(); }
    // Number of reals in a float genotype.
    std::size_t float_dimension() const noexcept { return float_dimension_; }

    TruthTable decode(const Genotype& g) const;
    Genotype random(Rng& rng) const;
    Genotype mutate(const Genotype& g, Rng& rng) const;
    Genotype crossover(const Genotype& a, const Genotype& b, Rng& rng) const;

private:
    int n_;
    Encoding encoding_;
    BitstringMode mode_;
    int decode_;
    TreeLimits limits_;
    std::size_t float_dimension_ = 0;
    std::shared_ptr<const OrbitTable> orbits_;
};

struct Individual {
    Genotype genotype;
    Fitness fitness;
};

using Population = std::vector<Individual>;

// Index of the first individual with the highest fitness.
std::size_t best_index(const Population& pop);

struct TrajectoryPoint {
    std::uint64_t evaluations;
    Fitness fitness;
};

enum class StopReason {
    Budget,
    Target,
    TimeLimit,
};

struct RunLimits {
    std::uint64_t evaluation_budget = 1'000'000;
    std::optional<int> target_nonlinearity;
    std::optional<double> time_limit_seconds;
};

/// Fitness evaluation with shared accounting: counts every evaluation,
/// remembers the best genotype seen and tells callers when to stop.
class Evaluator {
public:
    // Wall-clock checks happen every kClockInterval evaluations.
    static constexpr std::uint64_t kClockInterval = 1024;

    Evaluator(const Problem& problem, RunLimits limits);

    Fitness evaluate(const Genotype& g);
    Individual make_individual(Genotype g);

    std::uint64_t evaluations() const noexcept { return evaluations_; }
    bool should_stop() const noexcept { return stop_.has_value(); }
    std::optional<StopReason> stop_reason() const noexcept { return stop_; }

    bool has_best() const noexcept { return best_.has_value(); }
    const Individual& best() const { return *best_; }
    const std::vector<TrajectoryPoint>& trajectory() const noexcept { return trajectory_; }
    double elapsed_seconds() const;

    const Problem& problem() const noexcept { return problem_; }

private:
    void update_stop();

    const Problem& problem_;
    RunLimits limits_;
    std::uint64_t evaluations_ = 0;
    std::optional<StopReason> stop_;
    std::optional<Individual> best_;
    std::vector<TrajectoryPoint> trajectory_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace boolsearch

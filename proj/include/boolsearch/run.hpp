#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boolsearch/algorithms.hpp"
#include "boolsearch/local_search.hpp"
#include "boolsearch/problem.hpp"

namespace boolsearch {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm {
    Sst,
    DifferentialEvolution,
};

std::string_view encoding_name(Encoding e) noexcept; // "tt", "fp", "gp"
Encoding parse_encoding(std::string_view name);
std::string_view algorithm_name(Algorithm a) noexcept; // "sst", "de"
Algorithm parse_algorithm(std::string_view name);

/// Settings of a single search run.
struct RunConfig {
    int n = 7;
    Encoding encoding = Encoding::Bitstring;
    bool rotation_symmetric = false;
    Algorithm algorithm = Algorithm::Sst;

    std::size_t population_size = 500;
    double p_mut = 0.5;
    std::uint64_t evaluation_budget = 1'000'000;
    std::uint64_t seed = 0;

    int decode = 3;
    TreeLimits tree;
    DeParams de;
    LsConfig ls;

    std::optional<int> target_nonlinearity;
    std::optional<double> time_limit_seconds;

    BitstringMode mode() const noexcept
    {
        return rotation_symmetric ? BitstringMode::RotationSymmetric : BitstringMode::General;
    }

    // Result-table label such as TT, TT-RI-LS1, GP or FP-SST.
    std::string label() const;

    // Throws ConfigError on any inconsistent setting.
    void validate() const;
};

struct RunRecord {
    std::string label;
    std::size_t run_index = 0;
    RunConfig config;

    std::uint64_t evaluations = 0;
    StopReason stop_reason = StopReason::Budget;
    Fitness best;
    std::string best_genotype;
    std::string truth_table_hex;
    bool rotation_symmetric = false;
    std::vector<TrajectoryPoint> trajectory;
    double elapsed_seconds = 0.0;
};

std::string_view stop_reason_name(StopReason r) noexcept;
StopReason parse_stop_reason(std::string_view name);

/// Runs one search: random initial population (always evaluated, even with a
/// zero budget), then SST steps or DE generations until the budget, target
/// nonlinearity or time limit stops it. With local search enabled the
/// configured variant runs after every period of steps.
RunRecord run(const RunConfig& cfg, std::size_t run_index = 0);

} // namespace boolsearch

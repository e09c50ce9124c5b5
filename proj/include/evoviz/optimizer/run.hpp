#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "evoviz/core.hpp"

namespace evoviz {

struct RunConfig {
    std::size_t population_size = 92;
    std::size_t evaluation_budget = 100'000;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::nsga2;
    // Das-Dennis partitions for nsga3; 0 picks the largest p whose direction
    // count fits in the population.
    std::size_t reference_partitions = 0;

    // Throws ConfigError: population must be even and >= 4, budget >= population.
    void validate() const;
};

// Conventional population sizes: 92 for M = 3, 212 for M = 5, and otherwise
// the Das-Dennis count for M rounded up to a multiple of 4.
[[nodiscard]] std::size_t default_population_size(std::size_t objectives);

/// Runs NSGA-II or NSGA-III from a uniform random start until the evaluation
/// count reaches the budget. Every generation, including the initial
/// population, is recorded, so a run of budget B with population N has
/// ceil(B / N) generations.
///
/// The optional observer sees each generation as it is recorded.
[[nodiscard]] RunHistory run(const ProblemSpec& spec, const RunConfig& run_config,
                             const OperatorConfig& operator_config,
                             const std::function<void(const GenerationRecord&)>& observer = {});

}  // namespace evoviz

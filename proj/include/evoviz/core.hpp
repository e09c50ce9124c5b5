#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evoviz {

// Decision variables live in the unit box [0,1]^D.
using DecisionVector = std::vector<double>;
// Objective values, all minimised.
using ObjectiveVector = std::vector<double>;

struct Individual {
    DecisionVector x;
    ObjectiveVector y;

    friend bool operator==(const Individual&, const Individual&) = default;
};

enum class ProblemName { dtlz1, dtlz2, dtlz3, dtlz4, dtlz7 };

// Scalable DTLZ instance; D = k + M - 1.
struct ProblemSpec {
    ProblemName name = ProblemName::dtlz2;
    std::size_t objectives = 3;
    std::size_t k = 10;

    [[nodiscard]] std::size_t dimensions() const noexcept { return k + objectives - 1; }

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

enum class Algorithm { nsga2, nsga3 };

struct OperatorConfig {
    double crossover_probability = 0.8;
    double mutation_probability = 0.1;  // per decision variable
    double sbx_eta = 15.0;
    double pm_eta = 7.0;

    void validate() const;

    friend bool operator==(const OperatorConfig&, const OperatorConfig&) = default;
};

struct GenerationRecord {
    std::size_t generation = 0;
    std::vector<Individual> members;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

struct RunHistory {
    ProblemSpec problem;
    Algorithm algorithm = Algorithm::nsga2;
    std::size_t population_size = 0;
    std::size_t evaluation_budget = 0;
    std::uint64_t seed = 0;
    OperatorConfig operators;
    std::size_t reference_partitions = 0;  // nsga3 only, 0 otherwise
    std::vector<GenerationRecord> generations;

    // Throws ContractViolation naming the first broken invariant.
    void validate() const;

    friend bool operator==(const RunHistory&, const RunHistory&) = default;
};

[[nodiscard]] std::string_view to_string(ProblemName name) noexcept;
[[nodiscard]] std::string_view to_string(Algorithm algorithm) noexcept;
// Throws ConfigError for unknown tokens.
[[nodiscard]] ProblemName parse_problem_name(std::string_view token);
[[nodiscard]] Algorithm parse_algorithm(std::string_view token);

/// Pareto dominance for minimisation: a is no worse than b everywhere and
/// strictly better somewhere. Exact comparisons, no epsilon.
[[nodiscard]] bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices (ascending) of the points not dominated by any other point.
[[nodiscard]] std::vector<std::size_t> non_dominated_subset(std::span<const ObjectiveVector> points);

}  // namespace evoviz

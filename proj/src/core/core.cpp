#include "evoviz/core.hpp"

#include <cmath>
#include <string>

#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

bool in_unit_interval(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void OperatorConfig::validate() const
{
    if (!in_unit_interval(crossover_probability) || !in_unit_interval(mutation_probability)) {
        throw ConfigError("operator probabilities must lie in [0,1]");
    }
    if (!(sbx_eta > 0.0) || !(pm_eta > 0.0) || !std::isfinite(sbx_eta) || !std::isfinite(pm_eta)) {
        throw ConfigError("distribution indices must be positive and finite");
    }
}

void RunHistory::validate() const
{
    const auto m = problem.objectives;
    const auto d = problem.dimensions();
    if (m < 2) {
        throw ContractViolation("history: M must be at least 2");
    }
    if (population_size < 2) {
        throw ContractViolation("history: population_size must be at least 2");
    }
    for (std::size_t t = 0; t < generations.size(); ++t) {
        const auto& g = generations[t];
        if (g.generation != t) {
            throw ContractViolation("history: generation " + std::to_string(t) + " carries index " +
                                    std::to_string(g.generation));
        }
        if (g.members.size() != population_size) {
            throw ContractViolation("history: generation " + std::to_string(t) + " has " +
                                    std::to_string(g.members.size()) + " members, expected " +
                                    std::to_string(population_size));
        }
        for (const auto& ind : g.members) {
            if (ind.x.size() != d || ind.y.size() != m) {
                throw ContractViolation("history: generation " + std::to_string(t) +
                                        " has a member of the wrong dimensionality");
            }
        }
    }
}

std::string_view to_string(ProblemName name) noexcept
{
    switch (name) {
    case ProblemName::dtlz1: return "dtlz1";
    case ProblemName::dtlz2: return "dtlz2";
    case ProblemName::dtlz3: return "dtlz3";
    case ProblemName::dtlz4: return "dtlz4";
    case ProblemName::dtlz7: return "dtlz7";
    }
    return "unknown";
}

std::string_view to_string(Algorithm algorithm) noexcept
{
    return algorithm == Algorithm::nsga2 ? "nsga2" : "nsga3";
}

ProblemName parse_problem_name(std::string_view token)
{
    for (auto name : {ProblemName::dtlz1, ProblemName::dtlz2, ProblemName::dtlz3, ProblemName::dtlz4,
                      ProblemName::dtlz7}) {
        if (to_string(name) == token) {
            return name;
        }
    }
    throw ConfigError("unknown problem '" + std::string(token) + "'");
}

Algorithm parse_algorithm(std::string_view token)
{
    if (token == "nsga2") {
        return Algorithm::nsga2;
    }
    if (token == "nsga3") {
        return Algorithm::nsga3;
    }
    throw ConfigError("unknown algorithm '" + std::string(token) + "'");
}

bool dominates(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw ContractViolation("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] > b[m]) {
            return false;
        }
        if (a[m] < b[m]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

std::vector<std::size_t> non_dominated_subset(std::span<const ObjectiveVector> points)
{
    if (points.empty()) {
        throw ContractViolation("non_dominated_subset: empty input");
    }
    const auto m = points.front().size();
    for (const auto& p : points) {
        if (p.size() != m) {
            throw ContractViolation("non_dominated_subset: points differ in length");
        }
    }

    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = j != i && dominates(points[j], points[i]);
        }
        if (!dominated) {
            result.push_back(i);
        }
    }
    return result;
}

}  // namespace evoviz

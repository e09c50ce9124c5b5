#include "evoviz/optimizer/run.hpp"

#include <string>

#include "evoviz/errors.hpp"
#include "evoviz/optimizer/operators.hpp"
#include "evoviz/optimizer/reference_directions.hpp"
#include "evoviz/optimizer/selection.hpp"
#include "evoviz/optimizer/sorting.hpp"
#include "evoviz/problems.hpp"
#include "evoviz/random.hpp"

namespace evoviz {

namespace {

// Partitions conventionally used with NSGA-III for each objective count.
std::size_t conventional_partitions(std::size_t objectives)
{
    switch (objectives) {
    case 2: return 99;
    case 3: return 12;
    case 4: return 8;
    case 5: return 6;
    case 6: return 5;
    default: return 3;
    }
}

// Tournament state for NSGA-II: rank and crowding of the current population.
struct Standing {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

Standing standing_of(const std::vector<Individual>& population)
{
    const auto fronts = fast_nondominated_sort(std::span<const Individual>(population));
    Standing s{front_ranks(fronts, population.size()), std::vector<double>(population.size(), 0.0)};
    for (const auto& front : fronts) {
        std::vector<ObjectiveVector> ys;
        ys.reserve(front.size());
        for (auto i : front) {
            ys.push_back(population[i].y);
        }
        const auto cd = crowding_distance(ys);
        for (std::size_t r = 0; r < front.size(); ++r) {
            s.crowding[front[r]] = cd[r];
        }
    }
    return s;
}

std::size_t tournament(const Standing& s, Rng& rng)
{
    const auto n = s.rank.size();
    const auto a = rng.below(n);
    const auto b = rng.below(n);
    if (s.rank[a] != s.rank[b]) {
        return s.rank[a] < s.rank[b] ? a : b;
    }
    if (s.crowding[a] != s.crowding[b]) {
        return s.crowding[a] > s.crowding[b] ? a : b;
    }
    return std::min(a, b);
}

}  // namespace

void RunConfig::validate() const
{
    if (population_size < 4 || population_size % 2 != 0) {
        throw ConfigError("population size must be even and at least 4");
    }
    if (evaluation_budget < population_size) {
        throw ConfigError("evaluation budget must cover at least one generation");
    }
}

std::size_t default_population_size(std::size_t objectives)
{
    const auto count = das_dennis_count(objectives, conventional_partitions(objectives));
    return (count + 3) / 4 * 4;
}

RunHistory run(const ProblemSpec& spec, const RunConfig& run_config, const OperatorConfig& operator_config,
               const std::function<void(const GenerationRecord&)>& observer)
{
    run_config.validate();
    operator_config.validate();
    const auto n = run_config.population_size;
    const auto d = spec.dimensions();

    ReferenceDirectionSet directions;
    if (run_config.algorithm == Algorithm::nsga3) {
        const auto p = run_config.reference_partitions != 0
                           ? run_config.reference_partitions
                           : partitions_for_population(spec.objectives, n);
        if (p == 0) {
            throw ConfigError("nsga3: population of " + std::to_string(n) + " is smaller than the " +
                              std::to_string(spec.objectives) + " axis reference directions");
        }
        directions = das_dennis(spec.objectives, p);
        if (directions.directions.size() > n) {
            throw ConfigError("nsga3: " + std::to_string(directions.directions.size()) +
                              " reference directions exceed the population size " + std::to_string(n));
        }
    }

    RunHistory history;
    history.problem = spec;
    history.algorithm = run_config.algorithm;
    history.population_size = n;
    history.evaluation_budget = run_config.evaluation_budget;
    history.seed = run_config.seed;
    history.operators = operator_config;
    history.reference_partitions = directions.partitions;

    Rng rng(run_config.seed);

    auto record = [&](const std::vector<Individual>& population) {
        history.generations.push_back(GenerationRecord{history.generations.size(), population});
        if (observer) {
            observer(history.generations.back());
        }
    };

    std::vector<Individual> population(n);
    for (auto& ind : population) {
        ind.x.resize(d);
        for (auto& v : ind.x) {
            v = rng.uniform();
        }
    }
    for (auto& ind : population) {
        ind.y = evaluate(spec, ind.x);
    }
    std::size_t evaluations = n;
    record(population);

    while (evaluations < run_config.evaluation_budget) {
        std::vector<Individual> offspring;
        offspring.reserve(n);
        if (run_config.algorithm == Algorithm::nsga2) {
            const auto standing = standing_of(population);
            while (offspring.size() < n) {
                const auto& a = population[tournament(standing, rng)];
                const auto& b = population[tournament(standing, rng)];
                auto [c1, c2] = sbx_crossover(a.x, b.x, operator_config, rng);
                offspring.push_back({polynomial_mutation(std::move(c1), operator_config, rng), {}});
                offspring.push_back({polynomial_mutation(std::move(c2), operator_config, rng), {}});
            }
        } else {
            while (offspring.size() < n) {
                const auto& a = population[rng.below(n)];
                const auto& b = population[rng.below(n)];
                auto [c1, c2] = sbx_crossover(a.x, b.x, operator_config, rng);
                offspring.push_back({polynomial_mutation(std::move(c1), operator_config, rng), {}});
                offspring.push_back({polynomial_mutation(std::move(c2), operator_config, rng), {}});
            }
        }
        for (auto& child : offspring) {
            child.y = evaluate(spec, child.x);
        }
        evaluations += n;

        std::vector<Individual> combined = std::move(population);
        combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
        population = run_config.algorithm == Algorithm::nsga2
                         ? nsga2_select(combined, n)
                         : nsga3_select(combined, n, directions, rng);
        record(population);
    }
    return history;
}

}  // namespace evoviz

#include <string>

#include "evoviz/embedding.hpp"
#include "evoviz/errors.hpp"

namespace evoviz {

std::string_view to_string(EmbeddingSpace space) noexcept
{
    return space == EmbeddingSpace::search ? "search" : "objective";
}

EmbeddingSpace parse_space(std::string_view token)
{
    if (token == "search") {
        return EmbeddingSpace::search;
    }
    if (token == "objective") {
        return EmbeddingSpace::objective;
    }
    throw ConfigError("unknown space '" + std::string(token) + "' (expected search or objective)");
}

std::size_t generation_stride(std::size_t n_generations, std::size_t population_size, std::size_t max_points)
{
    if (n_generations == 0 || population_size == 0) {
        throw ContractViolation("generation_stride: empty history");
    }
    if (max_points < population_size) {
        throw ContractViolation("generation_stride: max_points below one generation");
    }
    const std::size_t max_generations = max_points / population_size;
    // ceil(n / s) <= max_generations  <=>  s >= ceil(n / max_generations)
    return (n_generations + max_generations - 1) / max_generations;
}

std::vector<std::size_t> sampled_generations(std::size_t n_generations, std::size_t stride)
{
    if (n_generations == 0 || stride == 0) {
        throw ContractViolation("sampled_generations: empty history or zero stride");
    }
    std::vector<std::size_t> gens;
    for (std::size_t back = 0; back < n_generations; back += stride) {
        gens.push_back(n_generations - 1 - back);
    }
    return {gens.rbegin(), gens.rend()};
}

SampledHistory concatenate(const RunHistory& history, EmbeddingSpace space, std::size_t max_points)
{
    if (history.generations.empty()) {
        throw ContractViolation("concatenate: empty history");
    }
    const auto pop = history.population_size;
    if (max_points < 2 * pop) {
        throw ContractViolation("concatenate: max_points " + std::to_string(max_points) +
                                " is below twice the population size " + std::to_string(pop));
    }
    SampledHistory sample;
    sample.stride = generation_stride(history.generations.size(), pop, max_points);
    for (auto t : sampled_generations(history.generations.size(), sample.stride)) {
        const auto& members = history.generations[t].members;
        for (std::size_t i = 0; i < members.size(); ++i) {
            sample.vectors.push_back(space == EmbeddingSpace::search ? members[i].x : members[i].y);
            sample.provenance.push_back({t, i});
        }
    }
    return sample;
}

Eigen::MatrixXd pairwise_sq_distances(std::span<const std::vector<double>> vectors)
{
    const auto n = static_cast<Eigen::Index>(vectors.size());
    if (!vectors.empty()) {
        const auto dim = vectors.front().size();
        for (const auto& v : vectors) {
            if (v.size() != dim) {
                throw ContractViolation("pairwise_sq_distances: vectors differ in dimensionality");
            }
        }
    }
    Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const auto& b = vectors[static_cast<std::size_t>(j)];
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const auto& a = vectors[static_cast<std::size_t>(i)];
            double sum = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double diff = a[k] - b[k];
                sum += diff * diff;
            }
            d2(i, j) = sum;
            d2(j, i) = sum;
        }
    }
    return d2;
}

Embedding embed_history(const RunHistory& history, EmbeddingSpace space, std::size_t max_points)
{
    auto sample = concatenate(history, space, max_points);
    auto mds = classical_mds(pairwise_sq_distances(sample.vectors));

    Embedding embedding;
    embedding.space = space;
    embedding.stride = sample.stride;
    embedding.eigenvalues = mds.eigenvalues;
    embedding.degenerate = mds.degenerate;
    embedding.points.reserve(sample.provenance.size());
    for (std::size_t i = 0; i < sample.provenance.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        embedding.points.push_back({mds.coordinates(row, 0), mds.coordinates(row, 1),
                                    sample.provenance[i].generation, sample.provenance[i].member_index});
    }
    return embedding;
}

}  // namespace evoviz

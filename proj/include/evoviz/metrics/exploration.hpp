#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evoviz/core.hpp"
#include "evoviz/embedding.hpp"

namespace evoviz {

// Exploration-exploitation profile of a run.
//
// For each generation t, d_i(t) is member i's distance to its nearest
// neighbour in that generation and m(t) the median of the d_i(t). D* is the
// median of the m(t). A member scores v = min(d / (2 D*), 1), so v < 0.5 marks
// exploitation and v >= 0.5 exploration. All medians take the lower middle
// element for even counts.
struct ExplorationProfile {
    EmbeddingSpace space = EmbeddingSpace::search;
    std::vector<double> per_generation_median;
    double overall_median = 0.0;
    std::vector<std::vector<double>> scores;  // [generation][member]

    [[nodiscard]] double score(std::size_t generation, std::size_t member_index) const
    {
        return scores.at(generation).at(member_index);
    }
};

[[nodiscard]] double lower_median(std::vector<double> values);

[[nodiscard]] std::vector<double> nearest_neighbour_distances(std::span<const std::vector<double>> points);
[[nodiscard]] std::vector<double> nearest_neighbour_distances(const GenerationRecord& generation,
                                                              EmbeddingSpace space);

// v = min(d / (2 D*), 1); with D* = 0 the score is 1 for d > 0 and 0 for d = 0.
[[nodiscard]] double exploration_score(double distance, double overall_median) noexcept;

[[nodiscard]] ExplorationProfile exploration_profile(const RunHistory& history, EmbeddingSpace space);

// Fraction of generation t's members scoring >= 0.5.
[[nodiscard]] double exploration_fraction(const ExplorationProfile& profile, std::size_t generation);

// Spearman rank correlation with average ranks for ties; 0 when either
// sequence is constant.
[[nodiscard]] double spearman_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace evoviz

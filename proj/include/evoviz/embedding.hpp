#pragma once

#include <Eigen/Core>
#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "evoviz/core.hpp"

namespace evoviz {

enum class EmbeddingSpace { search, objective };

[[nodiscard]] std::string_view to_string(EmbeddingSpace space) noexcept;
// Throws ConfigError for anything but "search" / "objective".
[[nodiscard]] EmbeddingSpace parse_space(std::string_view token);

inline constexpr std::size_t default_max_points = 10'000;

struct Provenance {
    std::size_t generation = 0;
    std::size_t member_index = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SampledHistory {
    std::vector<std::vector<double>> vectors;
    std::vector<Provenance> provenance;
    std::size_t stride = 1;
};

// Smallest s with ceil(n_gen / s) * population_size <= max_points.
[[nodiscard]] std::size_t generation_stride(std::size_t n_generations, std::size_t population_size,
                                            std::size_t max_points);

// Generations kept by the stride rule, ascending. Sampling is anchored at the
// final generation (n_gen-1, n_gen-1-s, ...), so the last one is always present.
[[nodiscard]] std::vector<std::size_t> sampled_generations(std::size_t n_generations, std::size_t stride);

/// Concatenates the sampled generations into one multiset of decision vectors
/// (search) or objective vectors (objective), in (generation, member) order.
/// Throws ContractViolation when max_points < 2 * population_size.
[[nodiscard]] SampledHistory concatenate(const RunHistory& history, EmbeddingSpace space, std::size_t max_points);

[[nodiscard]] Eigen::MatrixXd pairwise_sq_distances(std::span<const std::vector<double>> vectors);

struct MdsResult {
    Eigen::MatrixXd coordinates;  // n x 2
    std::array<double, 2> eigenvalues{0.0, 0.0};
    bool degenerate = false;
};

/// Classical (Torgerson) scaling to two dimensions.
///
/// B = -1/2 J D2 J is formed in place in the argument. The two largest
/// eigenpairs come from a dense solver for small n and from a block Krylov
/// Rayleigh-Ritz iteration otherwise. Column k is v_k * sqrt(max(lambda_k, 0)),
/// with each v_k flipped so its largest-magnitude entry (earliest on ties) is
/// positive. Coincident inputs give all-zero coordinates and degenerate = true.
[[nodiscard]] MdsResult classical_mds(Eigen::MatrixXd sq_dist);

struct EmbeddedPoint {
    double e1 = 0.0;
    double e2 = 0.0;
    std::size_t generation = 0;
    std::size_t member_index = 0;

    friend bool operator==(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};

struct Embedding {
    EmbeddingSpace space = EmbeddingSpace::search;
    std::vector<EmbeddedPoint> points;
    std::size_t stride = 1;
    std::array<double, 2> eigenvalues{0.0, 0.0};
    bool degenerate = false;
};

[[nodiscard]] Embedding embed_history(const RunHistory& history, EmbeddingSpace space,
                                      std::size_t max_points = default_max_points);

}  // namespace evoviz

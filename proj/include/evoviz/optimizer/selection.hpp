#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evoviz/core.hpp"
#include "evoviz/optimizer/reference_directions.hpp"
#include "evoviz/random.hpp"

namespace evoviz {

// Environmental selection. The index variants return ascending indices into
// the combined parent+offspring set; the Individual variants return those
// members in the same order.

/// Whole fronts by ascending rank, then the split front by descending crowding
/// distance with ties broken by lower index.
[[nodiscard]] std::vector<std::size_t> nsga2_select_indices(std::span<const ObjectiveVector> combined,
                                                            std::size_t target_size);
[[nodiscard]] std::vector<Individual> nsga2_select(std::span<const Individual> combined, std::size_t target_size);

/// Whole fronts by ascending rank, then reference-direction niching on the
/// split front: ideal-point translation, hyperplane normalisation through the
/// ASF extreme points, perpendicular-distance association and niche-count
/// balanced filling. Random choices draw from rng.
[[nodiscard]] std::vector<std::size_t> nsga3_select_indices(std::span<const ObjectiveVector> combined,
                                                            std::size_t target_size,
                                                            const ReferenceDirectionSet& directions, Rng& rng);
[[nodiscard]] std::vector<Individual> nsga3_select(std::span<const Individual> combined, std::size_t target_size,
                                                   const ReferenceDirectionSet& directions, Rng& rng);

// Per-axis divisors used by the niching step; exposed for tests.
[[nodiscard]] std::vector<double> nsga3_intercepts(std::span<const ObjectiveVector> translated);

}  // namespace evoviz

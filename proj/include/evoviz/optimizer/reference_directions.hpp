#pragma once

#include <cstddef>
#include <vector>

namespace evoviz {

struct ReferenceDirectionSet {
    std::size_t partitions = 0;
    std::vector<std::vector<double>> directions;
};

// C(M + p - 1, p), saturating at SIZE_MAX.
[[nodiscard]] std::size_t das_dennis_count(std::size_t objectives, std::size_t partitions) noexcept;

/// All points of the unit simplex whose components are multiples of 1/p, in
/// ascending lexicographic order. Throws ConfigError when the count would
/// exceed one million, ContractViolation when M < 2 or p < 1.
[[nodiscard]] ReferenceDirectionSet das_dennis(std::size_t objectives, std::size_t partitions);

// Largest p whose direction count does not exceed population_size; 0 if even p = 1 is too many.
[[nodiscard]] std::size_t partitions_for_population(std::size_t objectives, std::size_t population_size) noexcept;

}  // namespace evoviz

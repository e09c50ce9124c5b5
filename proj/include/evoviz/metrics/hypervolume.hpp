#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evoviz/core.hpp"
#include "evoviz/random.hpp"

namespace evoviz {

inline constexpr std::size_t max_exact_hypervolume_objectives = 5;

// Members that strictly dominate the reference and are not dominated by (or
// equal to an earlier) other such member.
[[nodiscard]] std::vector<ObjectiveVector> hypervolume_contributors(std::span<const ObjectiveVector> front,
                                                                    std::span<const double> reference);

/// Exact dominated hypervolume for 2 <= M <= 5.
///
/// WFG-style limit-set recursion: points are processed worst-first on the last
/// objective so each limit set shares that coordinate and the remainder is
/// computed one dimension lower, down to a 2-D sweep. Throws
/// UnsupportedDimension for M > 5.
[[nodiscard]] double hypervolume_exact(std::span<const ObjectiveVector> front, std::span<const double> reference);

struct HypervolumeEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

// Monte Carlo estimate from uniform samples in [min(front), reference].
// Requires samples >= 10^4.
[[nodiscard]] HypervolumeEstimate hypervolume_mc(std::span<const ObjectiveVector> front,
                                                 std::span<const double> reference, std::size_t samples, Rng& rng);

struct HypervolumeTrace {
    ObjectiveVector reference;
    std::vector<double> values;  // one per generation
};

// Componentwise maximum over every objective vector in the history, times 1.1.
[[nodiscard]] ObjectiveVector auto_reference(const RunHistory& history);

// Hypervolume of each generation's non-dominated members against one fixed
// reference (auto_reference when none is given).
[[nodiscard]] HypervolumeTrace hypervolume_trace(const RunHistory& history,
                                                 std::optional<ObjectiveVector> reference = std::nullopt);

}  // namespace evoviz

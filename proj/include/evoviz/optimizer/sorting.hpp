#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evoviz/core.hpp"

namespace evoviz {

using Fronts = std::vector<std::vector<std::size_t>>;

// Deb's fast non-dominated sort. Front 0 is the non-dominated set; indices
// inside each front are ascending.
[[nodiscard]] Fronts fast_nondominated_sort(std::span<const ObjectiveVector> points);
[[nodiscard]] Fronts fast_nondominated_sort(std::span<const Individual> population);

// Rank of every point (index of its front).
[[nodiscard]] std::vector<std::size_t> front_ranks(const Fronts& fronts, std::size_t size);

/// Crowding distance of each member of one front.
///
/// Fronts of one or two members are all infinite. Exact duplicates of an
/// earlier member get 0 and do not take part in the neighbour gaps of the
/// others. Per objective, the extreme unique members get infinity and interior
/// members add (next - prev) / range; an axis with zero range adds nothing.
[[nodiscard]] std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

}  // namespace evoviz

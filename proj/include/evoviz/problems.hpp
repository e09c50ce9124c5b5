#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "evoviz/core.hpp"

namespace evoviz {

// Default distance-variable count per problem: 5 for dtlz1, 20 for dtlz7, 10 otherwise.
[[nodiscard]] std::size_t default_k(ProblemName name) noexcept;

// Builds a validated spec; k defaults per problem. Throws ConfigError on M < 2 or k == 0.
[[nodiscard]] ProblemSpec make_problem(ProblemName name, std::size_t objectives,
                                       std::optional<std::size_t> k = std::nullopt);

// Distance functions over the trailing k variables.
[[nodiscard]] double g_rastrigin(std::span<const double> distance_vars);
[[nodiscard]] double g_sphere(std::span<const double> distance_vars);

// DTLZ4 maps every position variable through x^alpha.
inline constexpr double dtlz4_alpha = 100.0;

/// Evaluates the problem at x.
///
/// Throws ContractViolation if x has the wrong length and DomainError (with
/// the offending index) if any variable leaves [0,1].
[[nodiscard]] ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> x);

/// Distance-to-front proxy used to judge convergence:
///   dtlz1        |sum(y) - 0.5|
///   dtlz2/3/4    |norm(y) - 1|
///   dtlz7        |y_M - h-front value at g = 1 for the given y_1..y_{M-1}|
[[nodiscard]] double front_residual(const ProblemSpec& spec, std::span<const double> y);

}  // namespace evoviz

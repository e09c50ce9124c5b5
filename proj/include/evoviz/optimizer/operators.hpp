#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <utility>

#include "evoviz/core.hpp"
#include "evoviz/errors.hpp"

namespace evoviz {

// Anything that yields uniform doubles in [0,1). Rng satisfies it; tests
// substitute scripted sequences.
template <typename R>
concept UniformSource = requires(R& r) {
    { r.uniform() } -> std::convertible_to<double>;
};

// SBX spread factor for a uniform draw u.
[[nodiscard]] inline double sbx_beta(double u, double eta)
{
    const double exponent = 1.0 / (eta + 1.0);
    if (u <= 0.5) {
        return std::pow(2.0 * u, exponent);
    }
    return std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
}

// SBX children of two parents before clamping, for the given spread.
[[nodiscard]] inline std::pair<double, double> sbx_pair(double p1, double p2, double beta)
{
    return {0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2),
            0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)};
}

// Bounded polynomial perturbation on [0,1] for a uniform draw u.
[[nodiscard]] inline double polynomial_delta(double x, double u, double eta)
{
    const double exponent = 1.0 / (eta + 1.0);
    if (u < 0.5) {
        const double xy = 1.0 - x;  // distance to the lower bound is x
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
        return std::pow(val, exponent) - 1.0;
    }
    const double xy = x;  // 1 - distance to the upper bound
    const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
    return 1.0 - std::pow(val, exponent);
}

/// Simulated binary crossover. One draw decides whether crossover happens at
/// all (probability crossover_probability); if it does, each variable takes
/// one draw for the spread factor and a second that exchanges the two child
/// values when it falls below 0.5. Children are clamped to [0,1].
template <UniformSource R>
std::pair<DecisionVector, DecisionVector> sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                                                        const OperatorConfig& config, R& rng)
{
    if (p1.size() != p2.size()) {
        throw ContractViolation("sbx_crossover: parents differ in length");
    }
    DecisionVector c1 = p1;
    DecisionVector c2 = p2;
    if (!(rng.uniform() < config.crossover_probability)) {
        return {std::move(c1), std::move(c2)};
    }
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double beta = sbx_beta(rng.uniform(), config.sbx_eta);
        auto [a, b] = sbx_pair(p1[i], p2[i], beta);
        if (rng.uniform() < 0.5) {
            std::swap(a, b);
        }
        if (p1[i] == p2[i]) {
            continue;
        }
        c1[i] = std::clamp(a, 0.0, 1.0);
        c2[i] = std::clamp(b, 0.0, 1.0);
    }
    return {std::move(c1), std::move(c2)};
}

/// Polynomial mutation. Each variable is considered independently: one draw
/// against mutation_probability, and a second draw for the perturbation when
/// it mutates.
template <UniformSource R>
DecisionVector polynomial_mutation(DecisionVector x, const OperatorConfig& config, R& rng)
{
    for (double& xi : x) {
        if (rng.uniform() < config.mutation_probability) {
            xi = std::clamp(xi + polynomial_delta(xi, rng.uniform(), config.pm_eta), 0.0, 1.0);
        }
    }
    return x;
}

}  // namespace evoviz

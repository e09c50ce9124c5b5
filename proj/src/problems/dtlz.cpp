#include "evoviz/problems.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

constexpr double pi = std::numbers::pi;

// f_m for the spherical family (DTLZ2/3/4), position angles already mapped.
ObjectiveVector spherical_front(std::span<const double> position, std::size_t objectives, double g)
{
    ObjectiveVector f(objectives, 1.0 + g);
    for (std::size_t m = 0; m < objectives; ++m) {
        const std::size_t cos_terms = objectives - 1 - m;
        for (std::size_t i = 0; i < cos_terms; ++i) {
            f[m] *= std::cos(position[i] * pi / 2.0);
        }
        if (m > 0) {
            f[m] *= std::sin(position[cos_terms] * pi / 2.0);
        }
    }
    return f;
}

ObjectiveVector linear_front(std::span<const double> position, std::size_t objectives, double g)
{
    ObjectiveVector f(objectives, 0.5 * (1.0 + g));
    for (std::size_t m = 0; m < objectives; ++m) {
        const std::size_t prod_terms = objectives - 1 - m;
        for (std::size_t i = 0; i < prod_terms; ++i) {
            f[m] *= position[i];
        }
        if (m > 0) {
            f[m] *= 1.0 - position[prod_terms];
        }
    }
    return f;
}

double dtlz7_h(std::span<const double> leading, std::size_t objectives, double g)
{
    double h = static_cast<double>(objectives);
    for (double fm : leading) {
        h -= fm / (1.0 + g) * (1.0 + std::sin(3.0 * pi * fm));
    }
    return h;
}

}  // namespace

std::size_t default_k(ProblemName name) noexcept
{
    switch (name) {
    case ProblemName::dtlz1: return 5;
    case ProblemName::dtlz7: return 20;
    default: return 10;
    }
}

ProblemSpec make_problem(ProblemName name, std::size_t objectives, std::optional<std::size_t> k)
{
    if (objectives < 2) {
        throw ConfigError("number of objectives must be at least 2");
    }
    const std::size_t kk = k.value_or(default_k(name));
    if (kk == 0) {
        throw ConfigError("k must be positive");
    }
    return ProblemSpec{name, objectives, kk};
}

double g_rastrigin(std::span<const double> distance_vars)
{
    double sum = 0.0;
    for (double xi : distance_vars) {
        const double t = xi - 0.5;
        sum += t * t - std::cos(20.0 * pi * t);
    }
    return 100.0 * (static_cast<double>(distance_vars.size()) + sum);
}

double g_sphere(std::span<const double> distance_vars)
{
    double sum = 0.0;
    for (double xi : distance_vars) {
        const double t = xi - 0.5;
        sum += t * t;
    }
    return sum;
}

ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> x)
{
    const std::size_t m = spec.objectives;
    const std::size_t d = spec.dimensions();
    if (x.size() != d) {
        throw ContractViolation("evaluate: expected " + std::to_string(d) + " variables, got " +
                                std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
            throw DomainError("evaluate: variable " + std::to_string(i) + " outside [0,1]", i);
        }
    }

    const auto position = x.first(m - 1);
    const auto distance = x.subspan(m - 1);

    switch (spec.name) {
    case ProblemName::dtlz1:
        return linear_front(position, m, g_rastrigin(distance));
    case ProblemName::dtlz2:
        return spherical_front(position, m, g_sphere(distance));
    case ProblemName::dtlz3:
        return spherical_front(position, m, g_rastrigin(distance));
    case ProblemName::dtlz4: {
        std::vector<double> mapped(position.begin(), position.end());
        for (double& v : mapped) {
            v = std::pow(v, dtlz4_alpha);
        }
        return spherical_front(mapped, m, g_sphere(distance));
    }
    case ProblemName::dtlz7: {
        double sum = 0.0;
        for (double xi : distance) {
            sum += xi;
        }
        const double g = 1.0 + 9.0 / static_cast<double>(spec.k) * sum;
        ObjectiveVector f(position.begin(), position.end());
        f.push_back((1.0 + g) * dtlz7_h(position, m, g));
        return f;
    }
    }
    throw ConfigError("evaluate: unknown problem");
}

double front_residual(const ProblemSpec& spec, std::span<const double> y)
{
    if (y.size() != spec.objectives) {
        throw ContractViolation("front_residual: expected " + std::to_string(spec.objectives) +
                                " objectives, got " + std::to_string(y.size()));
    }
    switch (spec.name) {
    case ProblemName::dtlz1: {
        double sum = 0.0;
        for (double v : y) {
            sum += v;
        }
        return std::abs(sum - 0.5);
    }
    case ProblemName::dtlz2:
    case ProblemName::dtlz3:
    case ProblemName::dtlz4: {
        double sq = 0.0;
        for (double v : y) {
            sq += v * v;
        }
        return std::abs(std::sqrt(sq) - 1.0);
    }
    case ProblemName::dtlz7: {
        // g attains its minimum of 1 when every distance variable is 0.
        const double g = 1.0;
        const auto leading = y.first(y.size() - 1);
        return std::abs(y.back() - (1.0 + g) * dtlz7_h(leading, y.size(), g));
    }
    }
    throw ConfigError("front_residual: unknown problem");
}

}  // namespace evoviz

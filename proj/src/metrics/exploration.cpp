#include "evoviz/metrics/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

std::vector<double> average_ranks(std::span<const double> values)
{
    const auto n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double rank = 0.5 * static_cast<double>(i + j);
        for (std::size_t r = i; r <= j; ++r) {
            ranks[order[r]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double lower_median(std::vector<double> values)
{
    if (values.empty()) {
        throw ContractViolation("lower_median: empty input");
    }
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

std::vector<double> nearest_neighbour_distances(std::span<const std::vector<double>> points)
{
    const auto n = points.size();
    if (n < 2) {
        throw ContractViolation("nearest_neighbour_distances: need at least two members");
    }
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                const double diff = points[i][k] - points[j][k];
                sum += diff * diff;
            }
            best[i] = std::min(best[i], sum);
            best[j] = std::min(best[j], sum);
        }
    }
    for (double& d : best) {
        d = std::sqrt(d);
    }
    return best;
}

std::vector<double> nearest_neighbour_distances(const GenerationRecord& generation, EmbeddingSpace space)
{
    std::vector<std::vector<double>> points;
    points.reserve(generation.members.size());
    for (const auto& ind : generation.members) {
        points.push_back(space == EmbeddingSpace::search ? ind.x : ind.y);
    }
    return nearest_neighbour_distances(points);
}

double exploration_score(double distance, double overall_median) noexcept
{
    if (overall_median <= 0.0) {
        return distance > 0.0 ? 1.0 : 0.0;
    }
    return std::min(distance / (2.0 * overall_median), 1.0);
}

ExplorationProfile exploration_profile(const RunHistory& history, EmbeddingSpace space)
{
    if (history.generations.empty()) {
        throw ContractViolation("exploration_profile: empty history");
    }
    ExplorationProfile profile;
    profile.space = space;
    std::vector<std::vector<double>> distances;
    distances.reserve(history.generations.size());
    for (const auto& generation : history.generations) {
        distances.push_back(nearest_neighbour_distances(generation, space));
        profile.per_generation_median.push_back(lower_median(distances.back()));
    }
    profile.overall_median = lower_median(profile.per_generation_median);
    for (const auto& gen : distances) {
        std::vector<double> scores;
        scores.reserve(gen.size());
        for (double d : gen) {
            scores.push_back(exploration_score(d, profile.overall_median));
        }
        profile.scores.push_back(std::move(scores));
    }
    return profile;
}

double exploration_fraction(const ExplorationProfile& profile, std::size_t generation)
{
    if (generation >= profile.scores.size()) {
        throw ContractViolation("exploration_fraction: generation outside the profile");
    }
    const auto& scores = profile.scores[generation];
    const auto exploring = std::count_if(scores.begin(), scores.end(), [](double v) { return v >= 0.5; });
    return static_cast<double>(exploring) / static_cast<double>(scores.size());
}

double spearman_correlation(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size() || a.size() < 2) {
        throw ContractViolation("spearman_correlation: need two equally long sequences of length >= 2");
    }
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n - 1.0) / 2.0;
    double cov = 0.0;
    double va = 0.0;
    double vb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        cov += (ra[i] - mean) * (rb[i] - mean);
        va += (ra[i] - mean) * (ra[i] - mean);
        vb += (rb[i] - mean) * (rb[i] - mean);
    }
    if (va == 0.0 || vb == 0.0) {
        return 0.0;
    }
    return cov / std::sqrt(va * vb);
}

}  // namespace evoviz

#include "evoviz/optimizer/reference_directions.hpp"

#include <algorithm>
#include <limits>

#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

constexpr std::size_t max_directions = 1'000'000;

void enumerate(std::size_t position, std::size_t remaining, std::vector<std::size_t>& counts,
               std::size_t partitions, std::vector<std::vector<double>>& out)
{
    const auto p = static_cast<double>(partitions);
    if (position + 1 == counts.size()) {
        counts[position] = remaining;
        std::vector<double> w(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) {
            w[i] = static_cast<double>(counts[i]) / p;
        }
        out.push_back(std::move(w));
        return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
        counts[position] = c;
        enumerate(position + 1, remaining - c, counts, partitions, out);
    }
}

}  // namespace

std::size_t das_dennis_count(std::size_t objectives, std::size_t partitions) noexcept
{
    // C(n, r) with n = M + p - 1, r = min(p, M - 1), computed incrementally.
    const std::size_t n = objectives + partitions - 1;
    std::size_t r = std::min(partitions, objectives - 1);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= r; ++i) {
        const std::size_t factor = n - r + i;
        if (result > std::numeric_limits<std::size_t>::max() / factor) {
            return std::numeric_limits<std::size_t>::max();
        }
        result = result * factor / i;
    }
    return result;
}

ReferenceDirectionSet das_dennis(std::size_t objectives, std::size_t partitions)
{
    if (objectives < 2 || partitions < 1) {
        throw ContractViolation("das_dennis: requires M >= 2 and p >= 1");
    }
    if (das_dennis_count(objectives, partitions) > max_directions) {
        throw ConfigError("das_dennis: more than one million reference directions requested");
    }
    ReferenceDirectionSet set;
    set.partitions = partitions;
    std::vector<std::size_t> counts(objectives, 0);
    enumerate(0, partitions, counts, partitions, set.directions);
    return set;
}

std::size_t partitions_for_population(std::size_t objectives, std::size_t population_size) noexcept
{
    if (objectives < 2) {
        return 0;
    }
    std::size_t p = 0;
    while (das_dennis_count(objectives, p + 1) <= population_size) {
        ++p;
    }
    return p;
}

}  // namespace evoviz

#include "evoviz/optimizer/sorting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "evoviz/errors.hpp"

namespace evoviz {

Fronts fast_nondominated_sort(std::span<const ObjectiveVector> points)
{
    if (points.empty()) {
        throw ContractViolation("fast_nondominated_sort: empty population");
    }
    const auto n = points.size();
    const auto m = points.front().size();
    for (const auto& p : points) {
        if (p.size() != m) {
            throw ContractViolation("fast_nondominated_sort: points differ in length");
        }
    }

    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    Fronts fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            for (auto j : dominated_by[i]) {
                if (--domination_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

Fronts fast_nondominated_sort(std::span<const Individual> population)
{
    std::vector<ObjectiveVector> ys;
    ys.reserve(population.size());
    for (const auto& ind : population) {
        ys.push_back(ind.y);
    }
    return fast_nondominated_sort(ys);
}

std::vector<std::size_t> front_ranks(const Fronts& fronts, std::size_t size)
{
    std::vector<std::size_t> rank(size, 0);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        for (auto i : fronts[r]) {
            rank[i] = r;
        }
    }
    return rank;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front)
{
    if (front.empty()) {
        throw ContractViolation("crowding_distance: empty front");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    const auto n = front.size();
    std::vector<double> distance(n, 0.0);
    if (n <= 2) {
        std::fill(distance.begin(), distance.end(), inf);
        return distance;
    }

    std::vector<std::size_t> unique;
    for (std::size_t i = 0; i < n; ++i) {
        const bool duplicate = std::any_of(unique.begin(), unique.end(),
                                           [&](std::size_t u) { return front[u] == front[i]; });
        if (!duplicate) {
            unique.push_back(i);
        }
    }
    if (unique.size() <= 2) {
        for (auto u : unique) {
            distance[u] = inf;
        }
        return distance;
    }

    const auto m = front.front().size();
    std::vector<std::size_t> order(unique);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a][obj] < front[b][obj] || (front[a][obj] == front[b][obj] && a < b);
        });
        const double lo = front[order.front()][obj];
        const double hi = front[order.back()][obj];
        const double range = hi - lo;
        if (range <= 0.0) {
            continue;
        }
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        for (std::size_t r = 1; r + 1 < order.size(); ++r) {
            distance[order[r]] += (front[order[r + 1]][obj] - front[order[r - 1]][obj]) / range;
        }
    }
    return distance;
}

}  // namespace evoviz

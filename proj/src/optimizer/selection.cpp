#include "evoviz/optimizer/selection.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evoviz/errors.hpp"
#include "evoviz/optimizer/sorting.hpp"

namespace evoviz {

namespace {

constexpr double tiny = 1e-10;

std::vector<ObjectiveVector> objectives_of(std::span<const Individual> population)
{
    std::vector<ObjectiveVector> ys;
    ys.reserve(population.size());
    for (const auto& ind : population) {
        ys.push_back(ind.y);
    }
    return ys;
}

std::vector<Individual> gather(std::span<const Individual> population, const std::vector<std::size_t>& idx)
{
    std::vector<Individual> out;
    out.reserve(idx.size());
    for (auto i : idx) {
        out.push_back(population[i]);
    }
    return out;
}

// Splits fronts into the accepted prefix and the front that overflows.
struct FrontSplit {
    std::vector<std::size_t> accepted;
    std::vector<std::size_t> last;  // empty when the prefix fills target exactly
};

FrontSplit split_fronts(const Fronts& fronts, std::size_t target_size)
{
    FrontSplit split;
    for (const auto& front : fronts) {
        if (split.accepted.size() + front.size() <= target_size) {
            split.accepted.insert(split.accepted.end(), front.begin(), front.end());
            if (split.accepted.size() == target_size) {
                break;
            }
        } else {
            split.last = front;
            break;
        }
    }
    return split;
}

void check_sizes(std::span<const ObjectiveVector> combined, std::size_t target_size)
{
    if (target_size == 0 || combined.size() < target_size) {
        throw ContractViolation("selection: combined set smaller than target size");
    }
}

}  // namespace

std::vector<std::size_t> nsga2_select_indices(std::span<const ObjectiveVector> combined, std::size_t target_size)
{
    check_sizes(combined, target_size);
    auto split = split_fronts(fast_nondominated_sort(combined), target_size);
    auto selected = std::move(split.accepted);

    if (selected.size() < target_size) {
        std::vector<ObjectiveVector> front;
        front.reserve(split.last.size());
        for (auto i : split.last) {
            front.push_back(combined[i]);
        }
        const auto crowding = crowding_distance(front);
        std::vector<std::size_t> order(split.last.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (crowding[a] != crowding[b]) {
                return crowding[a] > crowding[b];
            }
            return split.last[a] < split.last[b];
        });
        for (std::size_t r = 0; selected.size() < target_size; ++r) {
            selected.push_back(split.last[order[r]]);
        }
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

std::vector<Individual> nsga2_select(std::span<const Individual> combined, std::size_t target_size)
{
    return gather(combined, nsga2_select_indices(objectives_of(combined), target_size));
}

std::vector<double> nsga3_intercepts(std::span<const ObjectiveVector> translated)
{
    const auto m = translated.front().size();
    const auto n = translated.size();

    std::vector<double> axis_max(m, 0.0);
    for (const auto& f : translated) {
        for (std::size_t j = 0; j < m; ++j) {
            axis_max[j] = std::max(axis_max[j], f[j]);
        }
    }

    // Extreme point per axis: minimiser of the achievement scalarising
    // function with weight 1 on that axis and 1e-6 elsewhere.
    Eigen::MatrixXd extremes(m, m);
    for (std::size_t axis = 0; axis < m; ++axis) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_index = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double asf = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double w = j == axis ? 1.0 : 1e-6;
                asf = std::max(asf, translated[i][j] / w);
            }
            if (asf < best) {
                best = asf;
                best_index = i;
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            extremes(static_cast<Eigen::Index>(axis), static_cast<Eigen::Index>(j)) = translated[best_index][j];
        }
    }

    std::vector<double> intercepts(m, 0.0);
    bool degenerate = false;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(extremes);
    if (!lu.isInvertible()) {
        degenerate = true;
    } else {
        const Eigen::VectorXd b = lu.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m)));
        for (std::size_t j = 0; j < m && !degenerate; ++j) {
            intercepts[j] = 1.0 / b(static_cast<Eigen::Index>(j));
            degenerate = !std::isfinite(intercepts[j]) || intercepts[j] <= tiny;
        }
    }
    if (degenerate) {
        intercepts = axis_max;
    }
    for (double& a : intercepts) {
        if (a <= tiny) {
            a = 1.0;
        }
    }
    return intercepts;
}

std::vector<std::size_t> nsga3_select_indices(std::span<const ObjectiveVector> combined, std::size_t target_size,
                                              const ReferenceDirectionSet& directions, Rng& rng)
{
    check_sizes(combined, target_size);
    if (directions.directions.empty()) {
        throw ContractViolation("nsga3_select: no reference directions");
    }
    const auto m = combined.front().size();
    auto split = split_fronts(fast_nondominated_sort(combined), target_size);
    auto selected = std::move(split.accepted);
    if (selected.size() == target_size) {
        std::sort(selected.begin(), selected.end());
        return selected;
    }

    // S_t: accepted members followed by the split front.
    std::vector<std::size_t> pool = selected;
    pool.insert(pool.end(), split.last.begin(), split.last.end());

    std::vector<double> ideal(m, std::numeric_limits<double>::infinity());
    for (auto i : pool) {
        for (std::size_t j = 0; j < m; ++j) {
            ideal[j] = std::min(ideal[j], combined[i][j]);
        }
    }
    std::vector<ObjectiveVector> translated;
    translated.reserve(pool.size());
    for (auto i : pool) {
        ObjectiveVector f(m);
        for (std::size_t j = 0; j < m; ++j) {
            f[j] = combined[i][j] - ideal[j];
        }
        translated.push_back(std::move(f));
    }
    const auto intercepts = nsga3_intercepts(translated);

    // Associate every pool member with its nearest reference line.
    const auto& dirs = directions.directions;
    std::vector<std::size_t> niche(pool.size());
    std::vector<double> perpendicular(pool.size());
    for (std::size_t s = 0; s < pool.size(); ++s) {
        std::vector<double> fn(m);
        for (std::size_t j = 0; j < m; ++j) {
            fn[j] = translated[s][j] / intercepts[j];
        }
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_dir = 0;
        for (std::size_t r = 0; r < dirs.size(); ++r) {
            double dot = 0.0;
            double norm2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                dot += fn[j] * dirs[r][j];
                norm2 += dirs[r][j] * dirs[r][j];
            }
            const double scale = dot / norm2;
            double d2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double diff = fn[j] - scale * dirs[r][j];
                d2 += diff * diff;
            }
            if (d2 < best) {
                best = d2;
                best_dir = r;
            }
        }
        niche[s] = best_dir;
        perpendicular[s] = std::sqrt(best);
    }

    std::vector<std::size_t> niche_count(dirs.size(), 0);
    for (std::size_t s = 0; s < selected.size(); ++s) {
        ++niche_count[niche[s]];
    }

    // Candidates from the split front, grouped by niche, ascending pool position.
    std::vector<std::vector<std::size_t>> candidates(dirs.size());
    for (std::size_t s = selected.size(); s < pool.size(); ++s) {
        candidates[niche[s]].push_back(s);
    }
    std::vector<bool> open(dirs.size(), true);

    while (selected.size() < target_size) {
        std::size_t min_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < dirs.size(); ++r) {
            if (open[r]) {
                min_count = std::min(min_count, niche_count[r]);
            }
        }
        std::vector<std::size_t> least;
        for (std::size_t r = 0; r < dirs.size(); ++r) {
            if (open[r] && niche_count[r] == min_count) {
                least.push_back(r);
            }
        }
        const auto r = least[least.size() == 1 ? 0 : rng.below(least.size())];
        auto& members = candidates[r];
        if (members.empty()) {
            open[r] = false;
            continue;
        }
        std::size_t pick = 0;
        if (niche_count[r] == 0) {
            for (std::size_t c = 1; c < members.size(); ++c) {
                if (perpendicular[members[c]] < perpendicular[members[pick]]) {
                    pick = c;
                }
            }
        } else {
            pick = members.size() == 1 ? 0 : rng.below(members.size());
        }
        selected.push_back(pool[members[pick]]);
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(pick));
        ++niche_count[r];
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

std::vector<Individual> nsga3_select(std::span<const Individual> combined, std::size_t target_size,
                                     const ReferenceDirectionSet& directions, Rng& rng)
{
    return gather(combined, nsga3_select_indices(objectives_of(combined), target_size, directions, rng));
}

}  // namespace evoviz

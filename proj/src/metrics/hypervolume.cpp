#include "evoviz/metrics/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

using Points = std::vector<ObjectiveVector>;

// Slab sums run in extended precision and are rounded once at the end.
using Wide = long double;

// Drops dominated points and later duplicates, keeping input order.
Points nondominated(Points pts)
{
    Points kept;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < pts.size() && !drop; ++j) {
            if (j == i) {
                continue;
            }
            drop = dominates(pts[j], pts[i]) || (j < i && pts[j] == pts[i]);
        }
        if (!drop) {
            kept.push_back(pts[i]);
        }
    }
    return kept;
}

Wide sweep_2d(Points pts, std::span<const double> ref)
{
    std::sort(pts.begin(), pts.end());
    Wide area = 0.0;
    double prev_y = ref[1];
    for (const auto& p : pts) {
        if (p[1] < prev_y) {
            area += (Wide{ref[0]} - p[0]) * (Wide{prev_y} - p[1]);
            prev_y = p[1];
        }
    }
    return area;
}

// Hypervolume of a mutually non-dominated set in pts.front().size() dimensions.
Wide wfg(Points pts, std::span<const double> ref)
{
    if (pts.empty()) {
        return 0.0;
    }
    const auto m = pts.front().size();
    if (m == 2) {
        return sweep_2d(std::move(pts), ref);
    }
    const auto last = m - 1;
    std::sort(pts.begin(), pts.end(), [last](const auto& a, const auto& b) { return a[last] > b[last]; });

    const auto lower_ref = ref.first(last);
    Wide volume = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto& p = pts[k];
        Wide box = 1.0;
        for (std::size_t j = 0; j < last; ++j) {
            box *= Wide{ref[j]} - p[j];
        }
        // Later points are no worse on the last objective, so each limited
        // point takes p[last] there and the overlap is a prism over a
        // (m-1)-dimensional set.
        Points limited;
        limited.reserve(pts.size() - k - 1);
        for (std::size_t j = k + 1; j < pts.size(); ++j) {
            ObjectiveVector q(last);
            for (std::size_t d = 0; d < last; ++d) {
                q[d] = std::max(p[d], pts[j][d]);
            }
            limited.push_back(std::move(q));
        }
        const Wide overlap = wfg(nondominated(std::move(limited)), lower_ref);
        volume += (Wide{ref[last]} - p[last]) * (box - overlap);
    }
    return volume;
}

void check_reference(std::span<const ObjectiveVector> front, std::span<const double> reference)
{
    if (reference.size() < 2) {
        throw ContractViolation("hypervolume: need at least two objectives");
    }
    for (double r : reference) {
        if (!std::isfinite(r)) {
            throw ContractViolation("hypervolume: reference point must be finite");
        }
    }
    for (const auto& p : front) {
        if (p.size() != reference.size()) {
            throw ContractViolation("hypervolume: point and reference differ in length");
        }
    }
}

}  // namespace

std::vector<ObjectiveVector> hypervolume_contributors(std::span<const ObjectiveVector> front,
                                                      std::span<const double> reference)
{
    check_reference(front, reference);
    Points inside;
    for (const auto& p : front) {
        bool strictly_better = true;
        for (std::size_t j = 0; j < p.size() && strictly_better; ++j) {
            strictly_better = p[j] < reference[j];
        }
        if (strictly_better) {
            inside.push_back(p);
        }
    }
    return nondominated(std::move(inside));
}

double hypervolume_exact(std::span<const ObjectiveVector> front, std::span<const double> reference)
{
    if (reference.size() > max_exact_hypervolume_objectives) {
        throw UnsupportedDimension("hypervolume_exact: " + std::to_string(reference.size()) +
                                   " objectives exceed the exact limit of 5; use hypervolume_mc");
    }
    return static_cast<double>(wfg(hypervolume_contributors(front, reference), reference));
}

HypervolumeEstimate hypervolume_mc(std::span<const ObjectiveVector> front, std::span<const double> reference,
                                   std::size_t samples, Rng& rng)
{
    if (samples < 10'000) {
        throw ContractViolation("hypervolume_mc: at least 10^4 samples required");
    }
    const auto pts = hypervolume_contributors(front, reference);
    if (pts.empty()) {
        return {};
    }
    const auto m = reference.size();
    std::vector<double> lower(reference.begin(), reference.end());
    for (const auto& p : pts) {
        for (std::size_t j = 0; j < m; ++j) {
            lower[j] = std::min(lower[j], p[j]);
        }
    }
    double box = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        box *= reference[j] - lower[j];
    }

    std::vector<double> s(m);
    std::size_t hits = 0;
    for (std::size_t n = 0; n < samples; ++n) {
        for (std::size_t j = 0; j < m; ++j) {
            s[j] = lower[j] + rng.uniform() * (reference[j] - lower[j]);
        }
        const bool covered = std::any_of(pts.begin(), pts.end(), [&](const ObjectiveVector& p) {
            for (std::size_t j = 0; j < m; ++j) {
                if (p[j] > s[j]) {
                    return false;
                }
            }
            return true;
        });
        hits += covered ? 1 : 0;
    }
    const double fraction = static_cast<double>(hits) / static_cast<double>(samples);
    return {fraction * box, box * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(samples))};
}

ObjectiveVector auto_reference(const RunHistory& history)
{
    if (history.generations.empty() || history.generations.front().members.empty()) {
        throw ContractViolation("auto_reference: empty history");
    }
    ObjectiveVector ref = history.generations.front().members.front().y;
    for (const auto& gen : history.generations) {
        for (const auto& ind : gen.members) {
            for (std::size_t j = 0; j < ref.size(); ++j) {
                ref[j] = std::max(ref[j], ind.y[j]);
            }
        }
    }
    for (double& r : ref) {
        r *= 1.1;
    }
    return ref;
}

HypervolumeTrace hypervolume_trace(const RunHistory& history, std::optional<ObjectiveVector> reference)
{
    HypervolumeTrace trace;
    trace.reference = reference ? std::move(*reference) : auto_reference(history);
    if (trace.reference.size() != history.problem.objectives) {
        throw ContractViolation("hypervolume_trace: reference has " + std::to_string(trace.reference.size()) +
                                " components for a " + std::to_string(history.problem.objectives) +
                                "-objective history");
    }
    trace.values.reserve(history.generations.size());
    for (const auto& gen : history.generations) {
        std::vector<ObjectiveVector> ys;
        ys.reserve(gen.members.size());
        for (const auto& ind : gen.members) {
            ys.push_back(ind.y);
        }
        Points front;
        for (auto i : non_dominated_subset(ys)) {
            front.push_back(ys[i]);
        }
        trace.values.push_back(hypervolume_exact(front, trace.reference));
    }
    return trace;
}

}  // namespace evoviz

#pragma once

// Brute-force reference implementations used to check the library.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include "evoviz/core.hpp"
#include "evoviz/random.hpp"

namespace evoviz::oracle {

using Points = std::vector<std::vector<double>>;

inline bool dominates(const std::vector<double>& a, const std::vector<double>& b)
{
    bool strictly = false;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] > b[m]) {
            return false;
        }
        strictly = strictly || a[m] < b[m];
    }
    return strictly;
}

// Pairwise scan: i survives when nobody dominates it.
inline std::vector<std::size_t> non_dominated(const Points& points, const std::vector<std::size_t>& among)
{
    std::vector<std::size_t> keep;
    for (auto i : among) {
        bool beaten = false;
        for (auto j : among) {
            if (j != i && dominates(points[j], points[i])) {
                beaten = true;
                break;
            }
        }
        if (!beaten) {
            keep.push_back(i);
        }
    }
    return keep;
}

// Repeatedly strips the non-dominated layer off the remaining points.
inline std::vector<std::vector<std::size_t>> peel_off(const Points& points)
{
    std::vector<std::size_t> remaining(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        remaining[i] = i;
    }
    std::vector<std::vector<std::size_t>> fronts;
    while (!remaining.empty()) {
        auto layer = non_dominated(points, remaining);
        std::vector<std::size_t> rest;
        std::set_difference(remaining.begin(), remaining.end(), layer.begin(), layer.end(), std::back_inserter(rest));
        fronts.push_back(std::move(layer));
        remaining = std::move(rest);
    }
    return fronts;
}

inline double distance(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

inline std::vector<double> nearest_neighbour(const Points& points)
{
    std::vector<double> d(points.size(), INFINITY);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i != j) {
                d[i] = std::min(d[i], distance(points[i], points[j]));
            }
        }
    }
    return d;
}

// Exact hypervolume by coordinate compression: the grid spanned by every
// distinct coordinate (plus the reference) is summed cell by cell, counting a
// cell when its lower corner is weakly dominated by some point.
inline double grid_hypervolume(const Points& front, const std::vector<double>& ref)
{
    const std::size_t m = ref.size();
    Points inside;
    for (const auto& p : front) {
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k) {
            ok = ok && p[k] < ref[k];
        }
        if (ok) {
            inside.push_back(p);
        }
    }
    if (inside.empty()) {
        return 0.0;
    }
    std::vector<std::vector<double>> axes(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& p : inside) {
            axes[k].push_back(p[k]);
        }
        axes[k].push_back(ref[k]);
        std::sort(axes[k].begin(), axes[k].end());
        axes[k].erase(std::unique(axes[k].begin(), axes[k].end()), axes[k].end());
    }
    std::vector<std::size_t> cell(m, 0);
    double total = 0.0;
    while (true) {
        bool covered = false;
        for (const auto& p : inside) {
            bool all = true;
            for (std::size_t k = 0; k < m && all; ++k) {
                all = p[k] <= axes[k][cell[k]];
            }
            if (all) {
                covered = true;
                break;
            }
        }
        if (covered) {
            double volume = 1.0;
            for (std::size_t k = 0; k < m; ++k) {
                volume *= axes[k][cell[k] + 1] - axes[k][cell[k]];
            }
            total += volume;
        }
        std::size_t k = 0;
        while (k < m && ++cell[k] + 1 >= axes[k].size()) {
            cell[k] = 0;
            ++k;
        }
        if (k == m) {
            break;
        }
    }
    return total;
}

inline Points uniform_points(Rng& rng, std::size_t n, std::size_t dim, double lo = 0.0, double hi = 1.0)
{
    Points points(n, std::vector<double>(dim));
    for (auto& p : points) {
        for (auto& v : p) {
            v = lo + (hi - lo) * rng.uniform();
        }
    }
    return points;
}

// Points on a coarse lattice, so ties and exact duplicates are common.
inline Points lattice_points(Rng& rng, std::size_t n, std::size_t dim, std::size_t levels)
{
    Points points(n, std::vector<double>(dim));
    for (auto& p : points) {
        for (auto& v : p) {
            v = static_cast<double>(rng.below(levels));
        }
    }
    return points;
}

// Mutually non-dominated points near the simplex sum(y) = 1.
inline Points random_front(Rng& rng, std::size_t n, std::size_t dim)
{
    Points points;
    while (points.size() < n) {
        std::vector<double> y(dim);
        double sum = 0.0;
        for (auto& v : y) {
            v = -std::log(1.0 - rng.uniform());
            sum += v;
        }
        for (auto& v : y) {
            v /= sum;
        }
        points.push_back(std::move(y));
    }
    return points;
}

inline Eigen::MatrixXd random_orthogonal(Rng& rng, std::size_t n)
{
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            a(i, j) = 2.0 * rng.uniform() - 1.0;
        }
    }
    return Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
}

// Largest |d_ij(a) - d_ij(b)| over all pairs of rows.
inline double max_distance_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < a.rows(); ++j) {
            const double da = (a.row(i) - a.row(j)).norm();
            const double db = (b.row(i) - b.row(j)).norm();
            const double gap = std::abs(da - db);
            worst = std::isnan(gap) ? INFINITY : std::max(worst, gap);
        }
    }
    return worst;
}

inline Eigen::MatrixXd to_matrix(const Points& points)
{
    Eigen::MatrixXd out(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(points[0].size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points[i].size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = points[i][j];
        }
    }
    return out;
}

inline double mean_pairwise(const Points& points)
{
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            sum += distance(points[i], points[j]);
            ++count;
        }
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace evoviz::oracle

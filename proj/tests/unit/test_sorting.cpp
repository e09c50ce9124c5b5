#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "../support/oracles.hpp"
#include "evoviz/errors.hpp"
#include "evoviz/optimizer/reference_directions.hpp"
#include "evoviz/optimizer/sorting.hpp"

using namespace evoviz;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("sorting examples")
{
    const std::vector<ObjectiveVector> chain{{0, 1}, {1, 0}, {1, 1}, {2, 2}};
    CHECK(fast_nondominated_sort(chain) == Fronts{{0, 1}, {2}, {3}});

    const std::vector<ObjectiveVector> flat{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    CHECK(fast_nondominated_sort(flat) == Fronts{{0, 1, 2, 3}});

    CHECK(front_ranks(fast_nondominated_sort(chain), 4) == std::vector<std::size_t>{0, 0, 1, 2});
}

TEST_CASE("sorting agrees with the peel-off oracle")
{
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = trial % 2 == 0 ? 3 : 5;
        const auto pts = trial % 4 < 2 ? oracle::uniform_points(rng, 200, dim) : oracle::lattice_points(rng, 200, dim, 5);
        const auto fronts = fast_nondominated_sort(pts);
        CHECK(fronts == oracle::peel_off(pts));

        // Fronts partition the indices; later fronts never dominate earlier
        // ones; each later member is dominated by the front just before it.
        std::vector<int> seen(pts.size(), 0);
        for (const auto& f : fronts) {
            for (auto i : f) {
                ++seen[i];
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        for (std::size_t r = 1; r < fronts.size(); ++r) {
            for (auto i : fronts[r]) {
                CHECK(std::any_of(fronts[r - 1].begin(), fronts[r - 1].end(),
                                  [&](std::size_t j) { return dominates(pts[j], pts[i]); }));
                for (std::size_t q = 0; q < r; ++q) {
                    for (auto j : fronts[q]) {
                        CHECK_FALSE(dominates(pts[i], pts[j]));
                    }
                }
            }
        }
    }
}

TEST_CASE("crowding distance examples")
{
    const std::vector<ObjectiveVector> two{{0, 1}, {1, 0}};
    CHECK(crowding_distance(two) == std::vector<double>{inf, inf});

    const std::vector<ObjectiveVector> one{{0, 1}};
    CHECK(crowding_distance(one) == std::vector<double>{inf});

    const std::vector<ObjectiveVector> three{{0, 2}, {1, 1}, {2, 0}};
    CHECK(crowding_distance(three) == std::vector<double>{inf, 2.0, inf});
}

TEST_CASE("crowding distance of duplicates")
{
    const std::vector<ObjectiveVector> front{{0, 2}, {1, 1}, {1, 1}, {2, 0}};
    const auto d = crowding_distance(front);
    CHECK(d[2] == 0.0);
    CHECK(d[1] == 2.0);
    CHECK(d[0] == inf);
    CHECK(d[3] == inf);
}

TEST_CASE("crowding distance on a flat axis has no NaN")
{
    const std::vector<ObjectiveVector> front{{0, 1}, {1, 1}, {3, 1}, {4, 1}};
    const auto d = crowding_distance(front);
    CHECK(d[0] == inf);
    CHECK(d[3] == inf);
    CHECK(d[1] == doctest::Approx(0.75));
    CHECK(d[2] == doctest::Approx(0.75));

    const std::vector<ObjectiveVector> same(5, ObjectiveVector{2, 2});
    for (double v : crowding_distance(same)) {
        CHECK_FALSE(std::isnan(v));
    }
}

TEST_CASE("crowding distance is non-negative on random fronts")
{
    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const auto front = oracle::random_front(rng, 3 + rng.below(30), 3);
        for (double v : crowding_distance(front)) {
            CHECK(v >= 0.0);
        }
    }
}

TEST_CASE("Das-Dennis directions")
{
    const auto corners = das_dennis(3, 1);
    CHECK(corners.partitions == 1);
    auto sorted = corners.directions;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::vector<double>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(std::is_sorted(corners.directions.begin(), corners.directions.end()));

    CHECK(das_dennis(3, 4).directions.size() == 15);
    CHECK(das_dennis(5, 6).directions.size() == 210);
    CHECK(das_dennis_count(3, 12) == 91);
    for (const auto& d : das_dennis(5, 6).directions) {
        double sum = 0.0;
        for (double v : d) {
            CHECK(v >= 0.0);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }

    CHECK_THROWS_AS((void)das_dennis(10, 30), ConfigError);
    CHECK_THROWS_AS((void)das_dennis(1, 3), ContractViolation);
    CHECK_THROWS_AS((void)das_dennis(3, 0), ContractViolation);
    CHECK(das_dennis_count(200, 200) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("partitions for a population")
{
    CHECK(partitions_for_population(3, 92) == 12);
    CHECK(partitions_for_population(5, 212) == 6);
    CHECK(partitions_for_population(3, 2) == 0);
}

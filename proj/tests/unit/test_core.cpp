#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/oracles.hpp"
#include "evoviz/core.hpp"
#include "evoviz/errors.hpp"

using namespace evoviz;

namespace {

bool dom(std::vector<double> a, std::vector<double> b)
{
    return dominates(a, b);
}

}  // namespace

TEST_CASE("dominance examples")
{
    CHECK(dom({1, 2, 3}, {2, 2, 3}));
    CHECK_FALSE(dom({1, 2}, {1, 2}));
    CHECK_FALSE(dom({1, 3}, {3, 1}));
    CHECK_FALSE(dom({3, 1}, {1, 3}));
    CHECK_THROWS_AS(dom({1, 2}, {1, 2, 3}), ContractViolation);
}

TEST_CASE("dominance is a strict partial order on random vectors")
{
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto pts = oracle::lattice_points(rng, 3, 3, 3);
        const auto &a = pts[0], &b = pts[1], &c = pts[2];
        CHECK_FALSE(dominates(a, a));
        CHECK_FALSE((dominates(a, b) && dominates(b, a)));
        if (dominates(a, b) && dominates(b, c)) {
            CHECK(dominates(a, c));
        }
        CHECK(dominates(a, b) == oracle::dominates(a, b));
    }
}

TEST_CASE("non-dominated subset examples")
{
    CHECK(non_dominated_subset(std::vector<ObjectiveVector>{{1, 1}}) == std::vector<std::size_t>{0});
    CHECK(non_dominated_subset(std::vector<ObjectiveVector>{{0, 1}, {1, 0}, {1, 1}}) ==
          std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS((void)non_dominated_subset(std::vector<ObjectiveVector>{}), ContractViolation);
}

TEST_CASE("duplicates co-exist in the non-dominated subset")
{
    const std::vector<ObjectiveVector> pts{{1, 2}, {1, 2}, {2, 1}};
    CHECK(non_dominated_subset(pts) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("non-dominated subset matches the pairwise scan")
{
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = trial % 2 ? oracle::uniform_points(rng, 50, 3) : oracle::lattice_points(rng, 50, 3, 4);
        std::vector<std::size_t> all(pts.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        const auto got = non_dominated_subset(pts);
        CHECK(got == oracle::non_dominated(pts, all));

        // Nothing inside is dominated by anything inside, and everything
        // outside is dominated by something inside.
        for (auto i : got) {
            for (auto j : got) {
                CHECK_FALSE(dominates(pts[i], pts[j]));
            }
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (std::find(got.begin(), got.end(), i) != got.end()) {
                continue;
            }
            CHECK(std::any_of(got.begin(), got.end(), [&](std::size_t j) { return dominates(pts[j], pts[i]); }));
        }
    }
}

TEST_CASE("names round-trip and unknown names are rejected")
{
    for (auto name : {ProblemName::dtlz1, ProblemName::dtlz2, ProblemName::dtlz3, ProblemName::dtlz4,
                      ProblemName::dtlz7}) {
        CHECK(parse_problem_name(to_string(name)) == name);
    }
    CHECK(parse_algorithm("nsga3") == Algorithm::nsga3);
    CHECK_THROWS_AS((void)parse_problem_name("dtlz5"), ConfigError);
    CHECK_THROWS_AS((void)parse_algorithm("moead"), ConfigError);
}

TEST_CASE("operator configuration bounds")
{
    OperatorConfig ok;
    CHECK_NOTHROW(ok.validate());
    OperatorConfig bad = ok;
    bad.crossover_probability = 1.5;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.pm_eta = 0.0;
    CHECK_THROWS(bad.validate());
}

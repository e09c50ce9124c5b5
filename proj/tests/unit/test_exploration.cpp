#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/oracles.hpp"
#include "evoviz/errors.hpp"
#include "evoviz/metrics/exploration.hpp"
#include "evoviz/optimizer/run.hpp"
#include "evoviz/problems.hpp"

using namespace evoviz;

namespace {

// A history over dtlz2 with M = 2 and k = 1, so decision vectors are 2-D.
RunHistory history_of(const std::vector<oracle::Points>& clouds)
{
    RunHistory h;
    h.problem = make_problem(ProblemName::dtlz2, 2, 1);
    h.population_size = clouds.front().size();
    for (std::size_t t = 0; t < clouds.size(); ++t) {
        GenerationRecord g{t, {}};
        for (const auto& x : clouds[t]) {
            g.members.push_back({x, evaluate(h.problem, x)});
        }
        h.generations.push_back(std::move(g));
    }
    h.evaluation_budget = clouds.size() * h.population_size;
    return h;
}

}  // namespace

TEST_CASE("lower median")
{
    CHECK(lower_median({3, 1, 2, 4}) == 2);
    CHECK(lower_median({5, 1, 3}) == 3);
    CHECK(lower_median({7}) == 7);
    CHECK_THROWS_AS((void)lower_median({}), ContractViolation);
}

TEST_CASE("nearest neighbour examples")
{
    const oracle::Points same(4, {0.5, 0.5});
    CHECK(nearest_neighbour_distances(same) == std::vector<double>(4, 0.0));
    const oracle::Points pair{{0, 0}, {3, 4}};
    CHECK(nearest_neighbour_distances(pair) == std::vector<double>{5, 5});
    const oracle::Points lone{{1, 1}};
    CHECK_THROWS_AS((void)nearest_neighbour_distances(lone), ContractViolation);
}

TEST_CASE("nearest neighbour distances match a full scan and ignore order")
{
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        auto pts = oracle::uniform_points(rng, 30, 4);
        const auto d = nearest_neighbour_distances(pts);
        const auto expected = oracle::nearest_neighbour(pts);
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        }
        std::reverse(pts.begin(), pts.end());
        auto reversed = nearest_neighbour_distances(pts);
        std::reverse(reversed.begin(), reversed.end());
        CHECK(reversed == d);
    }
}

TEST_CASE("score conventions")
{
    CHECK(exploration_score(1.0, 1.0) == 0.5);
    CHECK(exploration_score(5.0, 1.0) == 1.0);
    CHECK(exploration_score(0.0, 1.0) == 0.0);
    CHECK(exploration_score(0.3, 0.0) == 1.0);
    CHECK(exploration_score(0.0, 0.0) == 0.0);
}

TEST_CASE("identical clouds score one half everywhere")
{
    const oracle::Points cloud{{0.1, 0.1}, {0.4, 0.1}, {0.4, 0.4}, {0.1, 0.4}};
    const auto profile = exploration_profile(history_of({cloud, cloud, cloud}), EmbeddingSpace::search);
    CHECK(profile.per_generation_median[0] == profile.per_generation_median[2]);
    CHECK(profile.overall_median == profile.per_generation_median[1]);
    for (const auto& gen : profile.scores) {
        for (double v : gen) {
            CHECK(v == 0.5);
        }
    }
    CHECK(exploration_fraction(profile, 0) == 1.0);
}

TEST_CASE("a coincident generation is pure exploitation")
{
    Rng rng(52);
    const auto spread = oracle::uniform_points(rng, 6, 2);
    const oracle::Points collapsed(6, {0.5, 0.5});
    const auto profile =
        exploration_profile(history_of({spread, oracle::uniform_points(rng, 6, 2), collapsed, spread}),
                            EmbeddingSpace::search);
    for (double v : profile.scores[2]) {
        CHECK(v == 0.0);
    }
    CHECK(exploration_fraction(profile, 2) == 0.0);
    CHECK_THROWS_AS((void)exploration_fraction(profile, 4), ContractViolation);
}

TEST_CASE("a generation far apart relative to the overall median explores fully")
{
    const oracle::Points tight{{0.50, 0.50}, {0.51, 0.50}, {0.50, 0.51}, {0.51, 0.51}};
    const oracle::Points wide{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    const auto profile = exploration_profile(history_of({tight, tight, wide}), EmbeddingSpace::search);
    CHECK(exploration_fraction(profile, 2) == 1.0);
    CHECK(exploration_fraction(profile, 0) == 1.0);  // d = D*, score exactly 0.5
}

TEST_CASE("random generations explore more than converged ones")
{
    Rng rng(53);
    const auto random = oracle::uniform_points(rng, 20, 2);
    auto converged = oracle::uniform_points(rng, 20, 2, 0.45, 0.55);
    const auto profile = exploration_profile(history_of({random, converged, random, converged}),
                                             EmbeddingSpace::search);
    CHECK(exploration_fraction(profile, 0) > exploration_fraction(profile, 1));
}

TEST_CASE("scores are invariant under uniform scaling")
{
    Rng rng(54);
    std::vector<oracle::Points> clouds;
    for (int t = 0; t < 5; ++t) {
        clouds.push_back(oracle::uniform_points(rng, 8, 2));
    }
    auto scaled = clouds;
    for (auto& cloud : scaled) {
        for (auto& p : cloud) {
            for (auto& v : p) {
                v *= 0.5;
            }
        }
    }
    const auto a = exploration_profile(history_of(clouds), EmbeddingSpace::search);
    const auto b = exploration_profile(history_of(scaled), EmbeddingSpace::search);
    CHECK(b.overall_median == doctest::Approx(0.5 * a.overall_median));
    for (std::size_t t = 0; t < a.scores.size(); ++t) {
        for (std::size_t i = 0; i < a.scores[t].size(); ++i) {
            CHECK(b.scores[t][i] == doctest::Approx(a.scores[t][i]).epsilon(1e-12));
        }
        CHECK(exploration_fraction(a, t) == exploration_fraction(b, t));
    }
}

TEST_CASE("spearman correlation")
{
    const std::vector<double> up{1, 2, 3, 4, 5};
    const std::vector<double> down{9, 7, 5, 3, 1};
    const std::vector<double> flat{2, 2, 2, 2, 2};
    CHECK(spearman_correlation(up, up) == doctest::Approx(1.0));
    CHECK(spearman_correlation(up, down) == doctest::Approx(-1.0));
    CHECK(spearman_correlation(up, flat) == 0.0);
    // Average ranks for ties: ranks (1, 2.5, 2.5, 4) against (1, 2, 3, 4).
    const std::vector<double> tied{1, 5, 5, 9};
    const std::vector<double> line{1, 2, 3, 4};
    CHECK(spearman_correlation(tied, line) == doctest::Approx(0.9486832980505138));
}

TEST_CASE("nearest-neighbour medians fall during a dtlz2 run")
{
    RunConfig rc;
    rc.population_size = 92;
    rc.evaluation_budget = 9200;
    rc.seed = 42;
    const auto h = run(make_problem(ProblemName::dtlz2, 3), rc, OperatorConfig{});
    const auto profile = exploration_profile(h, EmbeddingSpace::search);
    std::vector<double> t;
    for (std::size_t i = 0; i < profile.per_generation_median.size(); ++i) {
        t.push_back(static_cast<double>(i));
    }
    CHECK(spearman_correlation(t, profile.per_generation_median) < 0.0);
    for (const auto& gen : profile.scores) {
        for (double v : gen) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}
